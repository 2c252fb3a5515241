#include "doctest.h"

#include "metla/catalog.hpp"
#include "metla/errors.hpp"
#include "support.hpp"

using namespace metla;
using metla::testing::Gen;

TEST_CASE("metric requirements") {
  LieAlgebra sl2 = sl2_split();
  CHECK_THROWS_WITH_AS(MetricLieAlgebra(sl2, Matrix(3, 3)), "degenerate metric", InvalidInput);
  CHECK_THROWS_AS(MetricLieAlgebra(sl2, Matrix::identity(3)), InvalidInput);
  CHECK(invariance_witness(sl2, Matrix::identity(3)).has_value());
  MetricLieAlgebra m(sl2, sl2.killing_form());
  Vector e{Scalar(0), Scalar(1), Scalar(0)}, f{Scalar(0), Scalar(0), Scalar(1)};
  CHECK(m.inner(e, f) == Scalar(4));
  CHECK(m.raise(m.lower(e)) == e);
  CHECK(m.signature() == Signature{1, 2, 0});
}

TEST_CASE("Einstein constant of a Killing metric") {
  MetricLieAlgebra m = catalog_build("sl2R_killing").algebra;
  CurvatureBundle c = compute_curvature(m);
  CHECK(c.ricci == m.metric() * Scalar::rational(-1, 4));
  CHECK(c.rho == Scalar::rational(-3, 4));
  CHECK(c.bach->is_zero());
  CHECK(c.weyl->is_zero());
}

TEST_CASE("curvature identities on the sl(2,C) family") {
  const LieAlgebra h = sl2_split();
  const Matrix kr = complex_killing_metric(h, 1, 0), ki = complex_killing_metric(h, 0, 1);
  for (auto [l, mu] : {std::pair{1, 1}, {2, 3}, {-1, 2}, {0, 1}, {1, 0}}) {
    MetricLieAlgebra m = catalog_build("sl2C_real", {{"lambda", Scalar(l)}, {"mu", Scalar(mu)}}).algebra;
    CurvatureBundle c = compute_curvature(m);
    const Scalar s = Scalar(l * l + mu * mu);
    CHECK(c.rho == Scalar(-3 * l) / s);
    Matrix expected = (kr * Scalar(mu) - ki * Scalar(l)) * (Scalar(3 * l * mu) / (Scalar(40) * s * s));
    CHECK(*c.bach == expected);
    CHECK(c.weyl->is_zero() == (l == 0));
    CHECK(riemann_symmetry_violations(c.riemann).empty());
    CHECK(cotton(m, *c.schouten).is_zero());
  }
}

TEST_CASE("Schouten tensor of the rescaled so(3) double extension") {
  // With the so(3) bracket and its action both scaled by sqrt(6)/2,
  // P(S_i, S_j) = 9/28 delta_ij and every other entry vanishes.
  MetricLieAlgebra m = catalog_build("so3ex").algebra;
  CurvatureBundle c = compute_curvature(m);
  CHECK(c.rho.is_zero());
  Matrix expected(9, 9);
  for (std::size_t i = 6; i < 9; ++i) expected(i, i) = Scalar::rational(9, 28);
  CHECK(*c.schouten == expected);
  CHECK(c.bach->is_zero());
}

TEST_CASE("property: curvature routes agree on random double extensions") {
  Gen gen(2024);
  for (int trial = 0; trial < 25; ++trial) {
    DoubleExtension e = double_extend(testing::random_double_extension(gen));
    const MetricLieAlgebra& m = e.g;
    Tensor r = riemann(m);
    CHECK(riemann_symmetry_violations(r).empty());
    Matrix ric = ricci_from_riemann(m, r);
    CHECK(ric == ricci_from_killing(m));
    Matrix r2 = ricci_squared_direct(m, ric);
    CHECK(r2 == ricci_squared_killing(m));
    CHECK(r2 == ricci_squared_riemann(m, ric, r));
    CHECK(covariant_derivative(m, r).is_zero());
    CHECK(double_extension_ricci_violations(e, ric).empty());
    Scalar rho = scalar_curvature(m, ric);
    Matrix p = schouten(m, ric, rho);
    Tensor w = weyl(m, r, p);
    CHECK(bach_from_weyl(m, p, w) == bach_closed_form(m, ric, r2, rho));
  }
}
