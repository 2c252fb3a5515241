#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace metla {

/// Exact element a + b*sqrt(d) of Q(sqrt d), d square-free.
///
/// d == 1 marks a plain rational (b is then always zero). A plain rational
/// combines with any field; two scalars carrying different d > 1 throw
/// ConfigurationError. Once an operation produces a value in Q(sqrt d) the
/// result keeps that d even if its surd part cancels.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : a_(value) {}   // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class value) : a_(std::move(value)) { a_.canonicalize(); }

  static Scalar rational(long num, long den);
  /// a + b*sqrt(d). Throws ContractViolation unless d >= 1 is square-free.
  static Scalar surd(mpq_class a, mpq_class b, std::int64_t d);
  /// sqrt(d) itself.
  static Scalar root(std::int64_t d);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& surd_part() const { return b_; }
  std::int64_t field() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  /// Exact sign of the real number a + b*sqrt(d): -1, 0 or 1.
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  /// Throws DivisionByZero on zero.
  Scalar inverse() const;

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }

  /// y with y*y == *this inside the same field, if one exists.
  std::optional<Scalar> sqrt_in_field() const;

  double to_double() const;

  /// Canonical text: "p", "p/q", "r/s*sqrt(d)", "p/q+r/s*sqrt(d)".
  std::string to_string() const;
  /// Accepts the canonical forms plus "sqrt(d)", "-sqrt(d)", "p/q-sqrt(d)"
  /// and plain integers. Throws InvalidInput on anything else.
  static Scalar parse(std::string_view text);

 private:
  static std::int64_t common_field(const Scalar& x, const Scalar& y);

  mpq_class a_;
  mpq_class b_;
  std::int64_t d_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

bool is_square_free(std::int64_t d);

/// Exact rational square root, if the argument is a square in Q.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

}  // namespace metla
