#pragma once

#include <random>
#include <string>

#include "metla/catalog.hpp"

namespace metla::testing {

// Deterministic source of small exact values for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Scalar rational(long bound = 5) {
    long den = integer(1, bound);
    return Scalar::rational(integer(-bound, bound), den);
  }
  Scalar nonzero_rational(long bound = 5) {
    Scalar x;
    while (x.is_zero()) x = rational(bound);
    return x;
  }
  Scalar surd(std::int64_t d, long bound = 5) {
    return Scalar::surd(rational(bound).rational_part(), rational(bound).rational_part(), d);
  }

  Matrix matrix(std::size_t r, std::size_t c, long bound = 4) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rational(bound);
    return m;
  }
  Matrix symmetric(std::size_t n, long bound = 4) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rational(bound);
    return m;
  }
  Matrix antisymmetric(std::size_t n, long bound = 4) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        m(i, j) = rational(bound);
        m(j, i) = -m(i, j);
      }
    return m;
  }
  // Invertible by construction: unit lower times unit upper triangular.
  Matrix invertible(std::size_t n, long bound = 3) {
    Matrix l = Matrix::identity(n), u = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        l(i, j) = rational(bound);
        u(j, i) = rational(bound);
      }
    return l * u;
  }
  // Skew endomorphism for the metric g: g^-1 A with A antisymmetric.
  Matrix skew_for(const Matrix& g_inverse, std::size_t n) { return g_inverse * antisymmetric(n); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// A random valid double extension drawn from four shapes:
//  0: abelian R^{t,s} by abelian s, delta_i polynomials in one skew map, random b;
//  1: Euclidean or Lorentzian R^3 by so(3) or sl(2,R) through the adjoint-type action, b a multiple of the Killing form;
//  2: sl(2,R) with its Killing form by a line acting by a random inner derivation;
//  3: an oscillator algebra by a line acting through a commuting Psi.
inline DoubleExtensionSpec random_double_extension(Gen& gen) {
  switch (gen.integer(0, 3)) {
    case 0: {
      std::size_t t = static_cast<std::size_t>(gen.integer(0, 2)), s = static_cast<std::size_t>(gen.integer(1, 3));
      std::size_t n = t + s, k = static_cast<std::size_t>(gen.integer(1, 2));
      Matrix g = pseudo_euclidean(t, s);
      Matrix phi = gen.skew_for(g, n);
      Matrix phi3 = phi * phi * phi;
      std::vector<Matrix> delta;
      for (std::size_t i = 0; i < k; ++i) delta.push_back(phi * gen.rational() + phi3 * gen.rational());
      return {MetricLieAlgebra(LieAlgebra::abelian(n), g), LieAlgebra::abelian(k), gen.symmetric(k), delta, {}};
    }
    case 1: {
      // so(3) acts on Euclidean R^3 by its defining representation, sl(2,R) on R^{1,2} by its adjoint one.
      bool compact = gen.coin();
      LieAlgebra s = compact ? so3_standard() : sl2_split();
      Matrix hg = compact ? Matrix::identity(3) : s.killing_form();
      std::vector<Matrix> delta;
      for (std::size_t i = 0; i < 3; ++i) delta.push_back(s.ad_basis(i));
      LieAlgebra h({"X1", "X2", "X3"}, std::vector<Scalar>(27));
      return {MetricLieAlgebra(h, hg), s, s.killing_form() * gen.rational(), delta, {}};
    }
    case 2: {
      LieAlgebra s = sl2_split();
      MetricLieAlgebra h(s, s.killing_form());
      Vector x{gen.rational(), gen.rational(), gen.rational()};
      Matrix d = s.ad(x);
      return {h, LieAlgebra({"S"}, {Scalar(0)}), Matrix{{gen.rational()}}, {d}, {}};
    }
    default: {
      Matrix phi = block_diagonal({rotation(gen.nonzero_rational()), rotation(gen.nonzero_rational())});
      Matrix psi = block_diagonal({rotation(gen.rational()), rotation(gen.rational())});
      RExtension osc = oscillator(0, 4, phi);
      Matrix d(6, 6);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) d(1 + i, 1 + j) = psi(i, j);
      return {osc.g, LieAlgebra({"S"}, {Scalar(0)}), Matrix{{gen.rational()}}, {d}, {}};
    }
  }
}

}  // namespace metla::testing
