#include "doctest.h"

#include "metla/algebra_io.hpp"
#include "metla/errors.hpp"

using namespace metla;

namespace {

std::vector<std::string> diagnostics_of(const std::string& text) {
  try {
    parse_algebra(text);
  } catch (const InvalidInput& e) {
    return e.diagnostics();
  }
  return {};
}

bool mentions(const std::vector<std::string>& diags, const std::string& needle) {
  for (const auto& d : diags)
    if (d.find(needle) != std::string::npos) return true;
  return false;
}

const char* kHeisenberg = R"j({
  "format": "metla-algebra", "version": 1, "name": "heis",
  "dim": 3, "brackets": [[0, 1, 2, "1"]],
  "metric": [[0, 0, "1"], [1, 1, "1"], [2, 2, "1"]]
})j";

}  // namespace

TEST_CASE("emit and parse round-trip every catalog entry") {
  for (const auto& e : catalog_entries()) {
    CAPTURE(e.key);
    MetricLieAlgebra m = catalog_build(e.key).algebra;
    std::string text = emit_algebra(e.key, m);
    LoadedAlgebra back = parse_algebra(text);
    CHECK(back.name == e.key);
    CHECK(back.instance.algebra.algebra().constants() == m.algebra().constants());
    CHECK(back.instance.algebra.metric() == m.metric());
    CHECK(emit_algebra(back.name, back.instance.algebra) == text);
    CHECK(back.instance.line_extension.has_value() == catalog_build(e.key).line_extension.has_value());
  }
}

TEST_CASE("a plain document without a family tag") {
  const char* text = R"j({"name": "line2", "dim": 2, "metric": [[0, 1, "1"]]})j";
  LoadedAlgebra a = parse_algebra(text);
  CHECK(a.instance.algebra.dim() == 2);
  CHECK(a.instance.algebra.signature() == Signature{1, 1, 0});
  CHECK(a.instance.algebra.algebra().labels() == std::vector<std::string>{"e1", "e2"});
  CHECK(a.instance.algebra.provenance().empty());
}

TEST_CASE("diagnostics name their field") {
  // Jacobi holds for the Heisenberg algebra but the identity metric is not invariant.
  CHECK(mentions(diagnostics_of(kHeisenberg), "document.metric"));

  auto conflict = diagnostics_of(R"j({"name": "x", "dim": 2,
    "brackets": [[0, 1, 1, "1"], [1, 0, 1, "1"]], "metric": [[0, 0, "1"], [1, 1, "1"]]})j");
  CHECK(mentions(conflict, "document.brackets[1]: conflicts with entry 0 under antisymmetry"));

  auto bad_scalar = diagnostics_of(R"j({"name": "x", "dim": 1, "metric": [[0, 0, "1/0"]]})j");
  CHECK(mentions(bad_scalar, "document.metric[0]: malformed scalar"));

  auto out_of_range = diagnostics_of(R"j({"name": "x", "dim": 2, "brackets": [[0, 5, 1, "1"]]})j");
  CHECK(mentions(out_of_range, "document.brackets[0]: index 5 out of range"));

  auto jacobi = diagnostics_of(R"j({"name": "x", "dim": 3,
    "brackets": [[0, 1, 1, "1"], [0, 2, 2, "1"], [1, 2, 0, "1"]]})j");
  CHECK(mentions(jacobi, "Jacobi"));

  auto degenerate = diagnostics_of(R"j({"name": "x", "dim": 2, "metric": [[0, 0, "1"]]})j");
  CHECK(mentions(degenerate, "degenerate"));

  auto field = diagnostics_of(R"j({"name": "x", "d": 2, "dim": 1, "metric": [[0, 0, "sqrt(3)"]]})j");
  CHECK(mentions(field, "outside Q(sqrt 2)"));

  CHECK(mentions(diagnostics_of("{"), "json"));
  CHECK(mentions(diagnostics_of(R"j({"dim": 1, "metric": [[0, 0, "1"]]})j"), "name"));
}

TEST_CASE("every problem is reported at once") {
  auto diags = diagnostics_of(R"j({"name": "x", "dim": 2,
    "brackets": [[0, 9, 1, "1"], [0, 1, 0, "one"]]})j");
  CHECK(diags.size() >= 2);
}

TEST_CASE("family tags must agree with explicit data") {
  MetricLieAlgebra m = catalog_build("sl2R_killing").algebra;
  std::string text = emit_algebra("k", m);
  const std::string scale = "\"scale\": \"1\"";
  auto pos = text.find(scale);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, scale.size(), "\"scale\": \"3\"");
  CHECK(mentions(diagnostics_of(text), "family: metric differs"));
  CHECK(mentions(diagnostics_of(R"j({"name": "x", "family": {"key": "nope"}})j"), "family.key"));
  LoadedAlgebra only = parse_algebra(R"j({"name": "x", "family": {"key": "osc", "params": {"s": 4,
    "Phi": [["0","-1","0","0"],["1","0","0","0"],["0","0","0","-2"],["0","0","2","0"]]}}})j");
  CHECK(only.instance.algebra.dim() == 6);
  CHECK(only.instance.line_extension.has_value());
}

TEST_CASE("double extension block") {
  // so(3) acting on Euclidean R^3, b = 0.
  const char* text = R"j({"name": "so3_on_r3", "double_extension": {
    "h": {"dim": 3, "metric": [[0, 0, "1"], [1, 1, "1"], [2, 2, "1"]]},
    "s": {"dim": 3, "labels": ["S1", "S2", "S3"],
          "brackets": [[0, 1, 2, "1"], [1, 2, 0, "1"], [2, 0, 1, "1"]]},
    "delta": [[[1, 2, "-1"], [2, 1, "1"]], [[0, 2, "1"], [2, 0, "-1"]], [[0, 1, "-1"], [1, 0, "1"]]]}})j";
  LoadedAlgebra a = parse_algebra(text);
  CHECK(a.instance.algebra.dim() == 9);
  CHECK(a.instance.algebra.signature() == Signature{3, 6, 0});

  std::string bad = text;
  const std::string skew = "[2, 1, \"1\"]", not_skew = "[2, 1, \"2\"]";
  bad.replace(bad.find(skew), skew.size(), not_skew);
  CHECK(mentions(diagnostics_of(bad), "double_extension: delta(S1) is not skew"));
  CHECK(mentions(diagnostics_of(R"j({"name": "x", "dim": 1, "double_extension": {}})j"), "cannot be combined"));
}

TEST_CASE("surds survive the round trip") {
  MetricLieAlgebra m = catalog_build("so3ex").algebra;
  std::string text = emit_algebra("so3ex", m);
  CHECK(text.find("\"d\": 6") != std::string::npos);
  CHECK(text.find("sqrt(6)") != std::string::npos);
  CHECK(emit_algebra("so3ex", parse_algebra(text).instance.algebra) == text);
}

TEST_CASE("parameter text") {
  const CatalogEntry& osc = catalog_entry("osc");
  const CatalogParam* phi = nullptr;
  for (const auto& p : osc.params)
    if (p.name == "Phi") phi = &p;
  REQUIRE(phi);
  ParamValue v = parse_param(*phi, "0,-1;1,0");
  CHECK(std::get<Matrix>(v) == rotation(Scalar(1)));
  CHECK(param_to_string(v) == "0,-1;1,0");
  CHECK_THROWS_AS(parse_param(*phi, "0,-1;1"), InvalidInput);
  CHECK_THROWS_AS(parse_param(*phi, "x"), InvalidInput);
  const CatalogParam& s = osc.params[1];
  CHECK(std::get<std::int64_t>(parse_param(s, "4")) == 4);
  CHECK_THROWS_AS(parse_param(s, "4.5"), InvalidInput);
}
