#include "doctest.h"

#include "metla/errors.hpp"
#include "metla/scalar.hpp"
#include "support.hpp"

using namespace metla;
using metla::testing::Gen;

TEST_CASE("rational arithmetic is exact") {
  Scalar a = Scalar::rational(1, 3), b = Scalar::rational(1, 6);
  CHECK(a + b == Scalar::rational(1, 2));
  CHECK(a * b == Scalar::rational(1, 18));
  CHECK(a / b == Scalar(2));
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
}

TEST_CASE("quadratic field arithmetic") {
  Scalar r6 = Scalar::root(6);
  CHECK(r6 * r6 == Scalar(6));
  Scalar x = Scalar::surd(1, 2, 6);  // 1 + 2 sqrt 6
  Scalar y = x.inverse();
  CHECK(x * y == Scalar(1));
  CHECK(y == Scalar::surd(mpq_class(-1, 23), mpq_class(2, 23), 6));
  CHECK_THROWS_AS(Scalar::root(2) + Scalar::root(3), ConfigurationError);
  CHECK_THROWS_AS(Scalar::surd(0, 1, 8), ContractViolation);
}

TEST_CASE("exact sign of a + b sqrt d") {
  CHECK(Scalar::surd(5, -2, 6).sign() == 1);   // 5 > 2 sqrt 6 = 4.89
  CHECK(Scalar::surd(4, -2, 6).sign() == -1);
  CHECK(Scalar::surd(-5, 2, 6).sign() == -1);
  CHECK(Scalar::surd(0, 0, 6).sign() == 0);
  CHECK(Scalar::rational(-1, 7) < Scalar(0));
}

TEST_CASE("square roots inside the field") {
  CHECK(Scalar::rational(9, 4).sqrt_in_field() == Scalar::rational(3, 2));
  CHECK_FALSE(Scalar(2).sqrt_in_field().has_value());
  // 5 + 2 sqrt 6 = (sqrt 2 + sqrt 3)^2 has no root in Q(sqrt 6); 7 + 4 sqrt 3 = (2 + sqrt 3)^2 does.
  CHECK_FALSE(Scalar::surd(5, 2, 6).sqrt_in_field().has_value());
  auto r = Scalar::surd(7, 4, 3).sqrt_in_field();
  REQUIRE(r);
  CHECK(*r * *r == Scalar::surd(7, 4, 3));
  auto s = (Scalar(3) * Scalar::rational(1, 2)).sqrt_in_field();
  CHECK_FALSE(s.has_value());
}

TEST_CASE("canonical text round-trips") {
  for (const char* text : {"0", "-3", "2/7", "1/2*sqrt(6)", "-1/2*sqrt(6)", "3/4+1/2*sqrt(6)", "sqrt(6)", "-sqrt(6)"})
    CHECK(Scalar::parse(text).to_string() == text);
  CHECK(Scalar::parse("1-sqrt(6)") == Scalar::surd(1, -1, 6));
  CHECK(Scalar::parse("6/4") == Scalar::rational(3, 2));
  for (const char* bad : {"", "1/0", "x", "1/2*sqrt(4)", "sqrt(", "1+"}) CHECK_THROWS_AS(Scalar::parse(bad), InvalidInput);
}

TEST_CASE("property: field axioms on random elements of Q(sqrt 6)") {
  Gen gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    Scalar x = gen.surd(6), y = gen.surd(6), z = gen.surd(6);
    CHECK((x + y) * z == x * z + y * z);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x - x == Scalar(0));
    if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
    CHECK(Scalar::parse(x.to_string()) == x);
    CHECK((x * y).sign() == x.sign() * y.sign());
    double gap = x.to_double() - y.to_double();
    if (gap > 1e-9) CHECK((x - y).sign() == 1);
    if (gap < -1e-9) CHECK((x - y).sign() == -1);
    auto r = (x * x).sqrt_in_field();
    REQUIRE(r);
    CHECK((*r == x || *r == -x));
  }
}
