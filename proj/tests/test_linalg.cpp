#include "doctest.h"

#include "metla/errors.hpp"
#include "metla/linalg.hpp"
#include "support.hpp"

using namespace metla;
using metla::testing::Gen;

TEST_CASE("rank, nullspace and solving") {
  Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(m * ns[0]));
  CHECK(ns[0] == Vector{Scalar(-1), Scalar(-1), Scalar(1)});
  auto x = solve_linear(m, Vector{Scalar(6), Scalar(12), Scalar(2)});
  REQUIRE(x);
  CHECK(m * *x == Vector{Scalar(6), Scalar(12), Scalar(2)});
  CHECK_FALSE(solve_linear(m, Vector{Scalar(1), Scalar(0), Scalar(0)}).has_value());
}

TEST_CASE("determinant and inverse") {
  Matrix m{{2, 1}, {7, 4}};
  CHECK(determinant(m) == Scalar(1));
  CHECK(inverse(m) == Matrix{{4, -1}, {-7, 2}});
  CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), DivisionByZero);
  CHECK(determinant(Matrix{{1, 2}, {2, 4}}).is_zero());
}

TEST_CASE("signatures of standard forms") {
  CHECK(signature_of_symmetric(Matrix{{0, 1}, {1, 0}}) == Signature{1, 1, 0});
  CHECK(signature_of_symmetric(Matrix{{0, 0}, {0, 0}}) == Signature{0, 0, 2});
  CHECK(signature_of_symmetric(Matrix{{8, 0, 0}, {0, 0, 4}, {0, 4, 0}}) == Signature{1, 2, 0});
  CHECK_THROWS_AS(signature_of_symmetric(Matrix{{0, 1}, {0, 0}}), ContractViolation);
}

TEST_CASE("quadratic relations") {
  Matrix j{{0, -1}, {1, 0}};
  auto r = quadratic_relation(j);
  REQUIRE(r);
  CHECK(r->first == Scalar(0));
  CHECK(r->second == Scalar(1));
  auto s = quadratic_relation(Matrix::identity(3) * Scalar(2));
  REQUIRE(s);
  CHECK(s->first == Scalar(-4));
  CHECK(s->second == Scalar(4));
  CHECK_FALSE(quadratic_relation(Matrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}).has_value());
}

TEST_CASE("property: congruence preserves the signature") {
  Gen gen(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    Vector diag(n);
    Signature expected;
    for (auto& d : diag) {
      long v = gen.integer(-2, 2);
      d = v;
      if (v < 0) ++expected.p;
      if (v > 0) ++expected.q;
      if (v == 0) ++expected.z;
    }
    Matrix p = gen.invertible(n);
    Matrix a = p.transpose() * Matrix::diagonal(diag) * p;
    CHECK(signature_of_symmetric(a) == expected);
  }
}

TEST_CASE("property: rank-nullity and inverse") {
  Gen gen(6);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = static_cast<std::size_t>(gen.integer(1, 5)), c = static_cast<std::size_t>(gen.integer(1, 5));
    Matrix m = gen.matrix(r, c, 2);
    auto ns = nullspace(m);
    CHECK(rank(m) + ns.size() == c);
    for (const auto& v : ns) CHECK(is_zero(m * v));
    Matrix q = gen.invertible(r);
    CHECK(q * inverse(q) == Matrix::identity(r));
    CHECK(determinant(q) == Scalar(1));
  }
}
