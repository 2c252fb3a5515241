#include "doctest.h"

#include <set>

#include "metla/catalog.hpp"
#include "metla/errors.hpp"

using namespace metla;

TEST_CASE("every entry reproduces its expected facts") {
  for (const auto& e : catalog_entries()) {
    CAPTURE(e.key);
    AlgebraInstance inst = catalog_build(e.key);
    const MetricLieAlgebra& m = inst.algebra;
    CHECK(m.algebra().validate().empty());
    CHECK(m.signature() == e.expected.signature);
    CHECK(m.algebra().is_solvable() == e.expected.solvable);
    CurvatureBundle c = compute_curvature(m);
    ObstructionReport o = necessary_conditions(m, c);
    CHECK(o.einstein == e.expected.einstein);
    CHECK(o.bach_flat == e.expected.bach_flat);
    CHECK(o.nullity.dim() == e.expected.nullity_dim);
    CHECK(decide_verdict(m, o, inst.line_extension).verdict == e.expected.verdict);
    CHECK(m.provenance().family == e.key);
    CHECK(m.provenance().params.size() == e.params.size());
  }
}

TEST_CASE("keys are unique and resolvable") {
  std::set<std::string> seen;
  for (const auto& e : catalog_entries()) {
    CHECK(seen.insert(e.key).second);
    CHECK(catalog_entry(e.key).description == e.description);
  }
  CHECK_THROWS_AS(catalog_entry("nonexistent"), InvalidInput);
}

TEST_CASE("parameter checking") {
  CHECK_THROWS_AS(catalog_build("nonexistent"), InvalidInput);
  CHECK_THROWS_AS(catalog_build("abelian", {{"q", std::int64_t{1}}}), InvalidInput);
  CHECK_THROWS_AS(catalog_build("abelian", {{"t", Scalar(1)}}), InvalidInput);
  CHECK_THROWS_AS(catalog_build("osc", {{"Phi", Scalar(1)}}), InvalidInput);
  CHECK_THROWS_AS(catalog_build("sl2C_real", {{"lambda", Scalar(0)}, {"mu", Scalar(0)}}), InvalidInput);
  AlgebraInstance a = catalog_build("abelian", {{"t", std::int64_t{2}}, {"s", std::int64_t{1}}});
  CHECK(a.algebra.signature() == Signature{2, 1, 0});
}

TEST_CASE("rescaling a Killing metric") {
  MetricLieAlgebra m = catalog_build("sl2R_killing", {{"scale", Scalar(2)}}).algebra;
  CHECK(m.metric() == sl2_split().killing_form() * Scalar(2));
  CHECK(compute_curvature(m).rho == Scalar::rational(-3, 8));
}
