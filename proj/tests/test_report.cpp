#include "doctest.h"

#include <fstream>
#include <sstream>

#include "metla/errors.hpp"
#include "metla/report.hpp"

using namespace metla;

namespace {

std::string catalog_report(const std::string& key) {
  AlgebraInstance inst = catalog_build(key);
  std::string doc = emit_algebra(key, inst.algebra);
  return report_json(analyze(LoadedAlgebra{key, std::move(inst)}, doc));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("digest") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("reports are deterministic") {
  for (const auto& e : catalog_entries()) {
    CAPTURE(e.key);
    std::string first = catalog_report(e.key);
    CHECK(first == catalog_report(e.key));
    CHECK(first.find("\"format\": \"metla-report\"") != std::string::npos);
  }
}

TEST_CASE("reports match the frozen golden files") {
  for (const auto& e : catalog_entries()) {
    CAPTURE(e.key);
    std::string golden = read_file(std::string(METLA_GOLDEN_DIR) + "/" + e.key + ".json");
    REQUIRE_FALSE(golden.empty());
    CHECK(catalog_report(e.key) == golden);
  }
}

TEST_CASE("low dimensions") {
  LoadedAlgebra line = parse_algebra(R"({"name": "line", "dim": 1, "metric": [[0, 0, "1"]]})");
  Report r = analyze(line, "x");
  CHECK(r.einstein);
  CHECK(r.verdict.verdict == Verdict::Einstein);
  std::string text = report_text(r);
  CHECK(text.find("line") != std::string::npos);
}

TEST_CASE("text report names the verdict") {
  AlgebraInstance inst = catalog_build("g_psi_phi");
  Report r = analyze(LoadedAlgebra{"g", inst}, "");
  CHECK(report_text(r).find(to_string(Verdict::NotConformallyEinsteinByTheorem)) != std::string::npos);
  REQUIRE(r.osc_extension);
  CHECK(r.osc_extension->det_b == Scalar(4));
}
