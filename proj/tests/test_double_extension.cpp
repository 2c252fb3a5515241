#include "doctest.h"

#include "metla/catalog.hpp"
#include "metla/errors.hpp"
#include "support.hpp"

using namespace metla;
using metla::testing::Gen;

namespace {

// Bracket table of the so(3) example exactly as printed: [S_i, S_j] = S_k,
// [E_i, E_j] = k sigma^k, [sigma^i, S_j] = [S_i, sigma^j] = sigma^k and
// [S_i, E_j] = [E_i, S_j] = k E_k with k = sqrt(6)/2, (i, j, k) even.
LieAlgebra printed_so3_table() {
  const std::size_t n = 9;
  std::vector<Scalar> c(n * n * n);
  auto set = [&](std::size_t a, std::size_t b, std::size_t k, const Scalar& v) {
    c[(a * n + b) * n + k] = v;
    c[(b * n + a) * n + k] = -v;
  };
  const Scalar kappa = Scalar::surd(0, mpq_class(1, 2), 6);
  const std::size_t even[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& p : even) {
    const std::size_t i = p[0], j = p[1], k = p[2];
    set(6 + i, 6 + j, 6 + k, 1);
    set(3 + i, 3 + j, k, kappa);
    set(i, 6 + j, k, 1);
    set(6 + i, j, k, 1);
    set(6 + i, 3 + j, 3 + k, kappa);
    set(3 + i, 6 + j, 3 + k, kappa);
  }
  return LieAlgebra({"sigma1", "sigma2", "sigma3", "E1", "E2", "E3", "S1", "S2", "S3"}, c);
}

}  // namespace

TEST_CASE("the printed so(3) example table violates Jacobi") {
  auto problems = printed_so3_table().validate();
  REQUIRE_FALSE(problems.empty());
  CHECK(problems.front().find("Jacobi") != std::string::npos);
}

TEST_CASE("rescaled so(3) example is a metric Lie algebra") {
  MetricLieAlgebra m = catalog_build("so3ex").algebra;
  CHECK(m.dim() == 9);
  CHECK(m.algebra().validate().empty());
  CHECK(m.signature() == Signature{3, 6, 0});
  const Scalar kappa = Scalar::surd(0, mpq_class(1, 2), 6);
  // [E1, E2] = kappa * sigma3 and [S1, E2] = kappa * E3.
  CHECK(m.algebra().c(3, 4, 2) == kappa);
  CHECK(m.algebra().c(6, 4, 5) == kappa);
  CHECK(m.algebra().c(6, 7, 8) == kappa);
}

TEST_CASE("double_extend rejects bad data") {
  MetricLieAlgebra h(LieAlgebra::abelian(2), Matrix::identity(2));
  LieAlgebra line({"S"}, {Scalar(0)});
  // Not skew for the metric.
  CHECK_THROWS_AS(double_extend({h, line, Matrix(1, 1), {Matrix{{1, 0}, {0, 0}}}, {}}), InvalidInput);
  // Wrong number of derivations.
  CHECK_THROWS_AS(double_extend({h, line, Matrix(1, 1), {}, {}}), InvalidInput);
  // b not ad-invariant on so(3).
  MetricLieAlgebra e3(LieAlgebra::abelian(3), Matrix::identity(3));
  LieAlgebra so3 = so3_standard();
  std::vector<Matrix> delta{so3.ad_basis(0), so3.ad_basis(1), so3.ad_basis(2)};
  CHECK_THROWS_AS(double_extend({e3, so3, Matrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}, delta, {}}), InvalidInput);
  // delta not a homomorphism: scaling the action but not the bracket.
  std::vector<Matrix> scaled{delta[0] * Scalar(2), delta[1] * Scalar(2), delta[2] * Scalar(2)};
  CHECK_THROWS_AS(double_extend({e3, so3, Matrix(3, 3), scaled, {}}), InvalidInput);
  CHECK_NOTHROW(double_extend({e3, so3, Matrix(3, 3), delta, {}}));
}

TEST_CASE("oscillator algebra structure") {
  Matrix phi = block_diagonal({rotation(Scalar(1)), rotation(Scalar(2))});
  RExtension osc = oscillator(0, 4, phi);
  const MetricLieAlgebra& g = osc.g;
  CHECK(g.dim() == 6);
  CHECK(g.signature() == Signature{1, 5, 0});
  // Killing form = tr(Phi^2) (e*_{l+1})^2.
  Matrix k(6, 6);
  k(5, 5) = (phi * phi).trace();
  CHECK(g.algebra().killing_form() == k);
  CHECK(g.algebra().center().dim() == 1);
  CHECK_THROWS_AS(oscillator(0, 2, Matrix{{1, 0}, {0, 1}}), InvalidInput);
  CHECK_THROWS_AS(oscillator(0, 2, Matrix(2, 2)), InvalidInput);
  // Skew but mixing the two rotation planes, so it does not commute with Phi.
  Matrix mixing{{0, 0, 1, 0}, {0, 0, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 0}};
  CHECK_THROWS_AS(g_psi_phi(mixing, phi, 0, 4), InvalidInput);
}

TEST_CASE("line extension data") {
  Matrix phi = block_diagonal({rotation(Scalar(1)), rotation(Scalar(2))});
  Matrix psi = block_diagonal({rotation(Scalar(1)), rotation(Scalar(3))});
  RExtension e = g_psi_phi(psi, phi, 0, 4);
  CHECK(e.g.dim() == 8);
  CHECK(e.m() == 6);
  // eta = tr(Psi Phi) e*_{l+1}.
  Vector eta(6);
  eta[5] = (psi * phi).trace();
  CHECK(e.eta == eta);
  CHECK(eta[5] == Scalar(-14));
  RExtension line = osc_plus_line(phi, psi);
  CHECK(line.g.dim() == 9);
  CHECK(line.g.signature() == Signature{2, 7, 0});
  CHECK(line.g.algebra().is_solvable());
}

TEST_CASE("normalizing b for an abelian s") {
  Gen gen(77);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix g = pseudo_euclidean(1, 2);
    Matrix phi = gen.skew_for(g, 3);
    if (phi.is_zero()) continue;
    DoubleExtensionSpec spec{MetricLieAlgebra(LieAlgebra::abelian(3), g), LieAlgebra::abelian(2), gen.symmetric(2),
                             {phi, phi * gen.rational()}, {}};
    DoubleExtension original = double_extend(spec);
    NormalizedExtension nz = normalize_abelian_b(spec);
    const Matrix& f = nz.f;
    // F is an isometry from the b = 0 metric to the original one and a homomorphism.
    CHECK(f.transpose() * original.g.metric() * f == nz.normalized.g.metric());
    const std::size_t n = original.g.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vector ei(n), ej(n);
        ei[i] = 1;
        ej[j] = 1;
        CHECK(f * nz.normalized.g.algebra().bracket(ei, ej) == original.g.algebra().bracket(f * ei, f * ej));
      }
  }
}

TEST_CASE("property: random double extensions are valid metric Lie algebras") {
  Gen gen(99);
  for (int trial = 0; trial < 50; ++trial) {
    DoubleExtensionSpec spec = testing::random_double_extension(gen);
    const std::size_t ds = spec.s.dim(), dh = spec.h.dim();
    DoubleExtension e = double_extend(spec);
    CHECK(e.g.dim() == 2 * ds + dh);
    CHECK(e.g.algebra().validate().empty());
    CHECK_FALSE(invariance_witness(e.g.algebra(), e.g.metric()).has_value());
    // s* is an abelian ideal and it is isotropic.
    std::vector<Vector> dual;
    for (std::size_t i = 0; i < ds; ++i) {
      Vector v(e.g.dim());
      v[e.dual_index(i)] = 1;
      dual.push_back(v);
    }
    Subspace sstar = Subspace::span(e.g.dim(), dual);
    CHECK(e.g.algebra().is_ideal(sstar));
    for (const auto& a : dual)
      for (const auto& b : dual) {
        CHECK(is_zero(e.g.algebra().bracket(a, b)));
        CHECK(e.g.inner(a, b).is_zero());
      }
  }
}
