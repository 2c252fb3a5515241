#include "metla/scalar.hpp"

#include <cctype>
#include <cmath>

#include "metla/errors.hpp"

namespace metla {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// [+-]digits[/digits]
std::optional<mpq_class> parse_rational(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  if (!is_digits(num)) return std::nullopt;
  if (slash != std::string_view::npos && !is_digits(den)) return std::nullopt;
  mpz_class n(std::string(num), 10);
  mpz_class d = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) return std::nullopt;
  mpq_class q(n, d);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string rational_text(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

bool is_square_free(std::int64_t d) {
  if (d < 1) return false;
  for (std::int64_t p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  mpq_class q(num, 1);
  q /= den;
  return Scalar(q);
}

Scalar Scalar::surd(mpq_class a, mpq_class b, std::int64_t d) {
  if (!is_square_free(d)) throw ContractViolation("field parameter must be a square-free integer >= 1");
  Scalar x;
  x.a_ = std::move(a);
  x.a_.canonicalize();
  if (d == 1) {
    x.a_ += b;
    return x;
  }
  x.b_ = std::move(b);
  x.b_.canonicalize();
  x.d_ = d;
  return x;
}

Scalar Scalar::root(std::int64_t d) { return surd(0, 1, d); }

std::int64_t Scalar::common_field(const Scalar& x, const Scalar& y) {
  if (x.d_ == y.d_ || y.d_ == 1) return x.d_;
  if (x.d_ == 1) return y.d_;
  throw ConfigurationError("cannot mix Q(sqrt " + std::to_string(x.d_) + ") with Q(sqrt " +
                           std::to_string(y.d_) + ")");
}

int Scalar::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d.
  mpq_class lhs = a_ * a_;
  mpq_class rhs = b_ * b_ * d_;
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = common_field(*this, o);
  a_ += o.a_;
  if (sgn(o.b_) != 0) b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = common_field(*this, o);
  a_ -= o.a_;
  if (sgn(o.b_) != 0) b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  d_ = common_field(*this, o);
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  // (a + b r)(c + e r) = (ac + b e d) + (a e + b c) r
  mpq_class na = a_ * o.a_ + b_ * o.b_ * d_;
  mpq_class nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar r = *this;
  if (sgn(b_) == 0) {
    r.a_ = 1 / a_;
    return r;
  }
  // 1/(a + b r) = (a - b r)/(a^2 - b^2 d); the norm is nonzero as d is not a square.
  mpq_class norm = a_ * a_ - b_ * b_ * d_;
  r.a_ = a_ / norm;
  r.b_ = -b_ / norm;
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  if (sgn(o.b_) == 0) {
    d_ = common_field(*this, o);
    a_ /= o.a_;
    if (sgn(b_) != 0) b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const Scalar& x, const Scalar& y) {
  Scalar::common_field(x, y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::optional<Scalar> Scalar::sqrt_in_field() const {
  if (sign() < 0) return std::nullopt;
  if (is_zero()) return *this;
  if (sgn(b_) == 0) {
    if (auto r = rational_sqrt(a_)) {
      Scalar s = *this;
      s.a_ = *r;
      return s;
    }
    if (d_ == 1) return std::nullopt;
    // q sqrt(d) squared is q^2 d.
    if (auto q = rational_sqrt(a_ / d_)) return surd(0, *q, d_);
    return std::nullopt;
  }
  // (p + q r)^2 = p^2 + q^2 d + 2 p q r with p, q both nonzero.
  auto n = rational_sqrt(a_ * a_ - b_ * b_ * d_);
  if (!n) return std::nullopt;
  for (const mpq_class& p2 : {mpq_class((a_ + *n) / 2), mpq_class((a_ - *n) / 2)}) {
    auto p = rational_sqrt(p2);
    if (!p || sgn(*p) == 0) continue;
    mpq_class q = b_ / (2 * *p);
    Scalar cand = surd(*p, q, d_);
    if (cand.sign() < 0) cand = -cand;
    if (cand * cand == *this) return cand;
  }
  return std::nullopt;
}

double Scalar::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

std::string Scalar::to_string() const {
  if (sgn(b_) == 0) return rational_text(a_);
  std::string surd_text;
  mpq_class mag = abs(b_);
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  surd_text = mag == 1 ? root : rational_text(mag) + "*" + root;
  if (sgn(a_) == 0) return (sgn(b_) < 0 ? "-" : "") + surd_text;
  return rational_text(a_) + (sgn(b_) < 0 ? "-" : "+") + surd_text;
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto fail = [&]() -> InvalidInput { return InvalidInput("malformed scalar '" + std::string(text) + "'"); };
  if (s.empty()) throw fail();

  auto at = s.find("sqrt(");
  if (at == std::string::npos) {
    auto q = parse_rational(s);
    if (!q) throw fail();
    return Scalar(*q);
  }
  if (s.back() != ')') throw fail();
  std::string_view dtext = std::string_view(s).substr(at + 5, s.size() - at - 6);
  if (!is_digits(dtext) || dtext.size() > 18) throw fail();
  std::int64_t d = std::stoll(std::string(dtext));
  if (!is_square_free(d) || d == 1) throw fail();

  std::string_view left = std::string_view(s).substr(0, at);
  bool has_coefficient = !left.empty() && left.back() == '*';
  if (has_coefficient) left.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = left.size(); i-- > 1;) {
    if (left[i] == '+' || left[i] == '-') {
      split = i;
      break;
    }
  }
  std::string_view rational_text_part = split == std::string_view::npos ? std::string_view{} : left.substr(0, split);
  std::string_view coef_text = split == std::string_view::npos ? left : left.substr(split);

  mpq_class a = 0;
  if (!rational_text_part.empty()) {
    auto q = parse_rational(rational_text_part);
    if (!q) throw fail();
    a = *q;
  }
  mpq_class b;
  if (has_coefficient) {
    auto q = parse_rational(coef_text);
    if (!q) throw fail();
    b = *q;
  } else if (coef_text.empty() || coef_text == "+") {
    b = 1;
  } else if (coef_text == "-") {
    b = -1;
  } else {
    throw fail();
  }
  return surd(a, b, d);
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

}  // namespace metla
