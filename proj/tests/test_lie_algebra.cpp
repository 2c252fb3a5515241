#include "doctest.h"

#include "metla/catalog.hpp"
#include "metla/errors.hpp"
#include "support.hpp"

using namespace metla;

namespace {

// Heisenberg algebra [X, Y] = Z.
LieAlgebra heisenberg() {
  std::vector<Scalar> c(27);
  c[(0 * 3 + 1) * 3 + 2] = 1;
  c[(1 * 3 + 0) * 3 + 2] = -1;
  return LieAlgebra({"X", "Y", "Z"}, c);
}

}  // namespace

TEST_CASE("sl(2) brackets and Killing form") {
  LieAlgebra sl2 = sl2_split();
  CHECK(sl2.validate().empty());
  Vector h{Scalar(1), Scalar(0), Scalar(0)}, e{Scalar(0), Scalar(1), Scalar(0)}, f{Scalar(0), Scalar(0), Scalar(1)};
  CHECK(sl2.bracket(h, e) == Scalar(2) * e);
  CHECK(sl2.bracket(h, f) == Scalar(-2) * f);
  CHECK(sl2.bracket(e, f) == h);
  CHECK(sl2.killing_form() == Matrix{{8, 0, 0}, {0, 0, 4}, {0, 4, 0}});
  CHECK_FALSE(sl2.is_solvable());
  CHECK(sl2.center().is_zero());
  CHECK(sl2.derivations().dim() == 3);
  CHECK(sl2.inner_derivations() == sl2.derivations());
}

TEST_CASE("so(3) and sl(3)") {
  LieAlgebra so3 = so3_standard();
  CHECK(so3.validate().empty());
  CHECK(so3.killing_form() == Matrix::identity(3) * Scalar(-2));
  LieAlgebra sl3 = sl3_split();
  CHECK(sl3.dim() == 8);
  CHECK(sl3.validate().empty());
  CHECK(signature_of_symmetric(sl3.killing_form()) == Signature{3, 5, 0});
}

TEST_CASE("solvable and nilpotent series") {
  LieAlgebra heis = heisenberg();
  CHECK(heis.is_nilpotent());
  CHECK(heis.is_solvable());
  CHECK(heis.center().dim() == 1);
  CHECK(heis.derived_series()[1].dim() == 1);
  CHECK(heis.killing_form().is_zero());
  RExtension osc = oscillator(0, 2, rotation(Scalar(1)));
  CHECK(osc.g.algebra().is_solvable());
  CHECK_FALSE(osc.g.algebra().is_nilpotent());
  CHECK(LieAlgebra::abelian(4).derivations().dim() == 16);
  CHECK(LieAlgebra::abelian(4).inner_derivations().is_zero());
}

TEST_CASE("ideals and subspaces") {
  LieAlgebra heis = heisenberg();
  Subspace z = heis.center();
  CHECK(heis.is_ideal(z));
  Subspace x = Subspace::span(3, {Vector{Scalar(1), Scalar(0), Scalar(0)}});
  CHECK_FALSE(heis.is_ideal(x));
  CHECK((x + z).dim() == 2);
  CHECK((x + z).intersect(z) == z);
  CHECK(Subspace::whole(3).contains(x));
}

TEST_CASE("validation names the failing identity") {
  std::vector<Scalar> c(27);
  c[(0 * 3 + 1) * 3 + 2] = 1;  // [e1, e2] = e3 without the antisymmetric partner
  auto problems = LieAlgebra({"a", "b", "c"}, c).validate();
  REQUIRE_FALSE(problems.empty());
  CHECK(problems.front().find("antisymmetry") != std::string::npos);

  // [X, Y] = Y, [X, Z] = Z, [Y, Z] = X breaks Jacobi.
  std::vector<Scalar> d(27);
  auto set = [&](int i, int j, int k, long v) {
    d[(i * 3 + j) * 3 + k] = v;
    d[(j * 3 + i) * 3 + k] = -v;
  };
  set(0, 1, 1, 1);
  set(0, 2, 2, 1);
  set(1, 2, 0, 1);
  auto jac = LieAlgebra({"X", "Y", "Z"}, d).validate();
  REQUIRE_FALSE(jac.empty());
  CHECK(jac.front().find("Jacobi") != std::string::npos);
  CHECK_THROWS_AS(LieAlgebra::checked({"X", "Y", "Z"}, d), InvalidInput);
}

TEST_CASE("complex realification of sl(2)") {
  LieAlgebra g = complex_realification(sl2_split());
  CHECK(g.dim() == 6);
  CHECK(g.validate().empty());
  CHECK(g.labels()[3] == "iH");
  // Killing form of the realification is 2 K_R.
  Matrix k = sl2_split().killing_form();
  CHECK(g.killing_form() == complex_killing_metric(sl2_split(), Scalar(2), Scalar(0)));
  CHECK(g.center().is_zero());
  CHECK(k(0, 0) == Scalar(8));
}
