#include "metla/curvature.hpp"

#include <tuple>

#include "metla/errors.hpp"

namespace metla {

Tensor::Tensor(std::size_t n, std::size_t rank) : n_(n), rank_(rank) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < rank; ++i) size *= n;
  data_.resize(size);
}

bool Tensor::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::size_t Tensor::offset(const std::vector<std::size_t>& idx) const {
  if (idx.size() != rank_) throw ContractViolation("tensor index count does not match rank");
  std::size_t off = 0;
  for (auto i : idx) off = off * n_ + i;
  return off;
}

Tensor Tensor::from_matrix(const Matrix& m) {
  if (!m.is_square()) throw ContractViolation("from_matrix needs a square matrix");
  Tensor t(m.rows(), 2);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(i, j) = m(i, j);
  return t;
}

Matrix Tensor::to_matrix() const {
  if (rank_ != 2) throw ContractViolation("to_matrix needs a rank-2 tensor");
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

// L_{mkl} = <[e_m, e_k], e_l>
Tensor lowered_brackets(const MetricLieAlgebra& m) {
  const auto& l = m.algebra();
  const auto& g = m.metric();
  const std::size_t n = m.dim();
  Tensor t(n, 3);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& [p, v] : l.bracket_terms(a, b))
        for (std::size_t c = 0; c < n; ++c)
          if (!g(p, c).is_zero()) t(a, b, c) += v * g(p, c);
  return t;
}

}  // namespace

Tensor riemann(const MetricLieAlgebra& m) {
  const auto& l = m.algebra();
  const std::size_t n = m.dim();
  Tensor low = lowered_brackets(m);
  Tensor r(n, 4);
  const Scalar quarter = Scalar::rational(-1, 4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [p, v] : l.bracket_terms(i, j)) {
        Scalar f = quarter * v;
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t q = 0; q < n; ++q)
            if (!low(p, k, q).is_zero()) r(i, j, k, q) += f * low(p, k, q);
      }
  return r;
}

Matrix ricci_from_riemann(const MetricLieAlgebra& m, const Tensor& r) {
  const auto& gi = m.metric_inverse();
  const std::size_t n = m.dim();
  Matrix ric(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      if (gi(k, l).is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!r(k, i, j, l).is_zero()) ric(i, j) += gi(k, l) * r(k, i, j, l);
    }
  return ric;
}

Matrix ricci_from_killing(const MetricLieAlgebra& m) {
  return m.algebra().killing_form() * Scalar::rational(-1, 4);
}

Scalar metric_trace(const MetricLieAlgebra& m, const Matrix& s) {
  const auto& gi = m.metric_inverse();
  Scalar t;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!gi(i, j).is_zero() && !s(i, j).is_zero()) t += gi(i, j) * s(i, j);
  return t;
}

Matrix raise_first(const MetricLieAlgebra& m, const Matrix& s) { return m.metric_inverse() * s; }

Scalar scalar_curvature(const MetricLieAlgebra& m, const Matrix& ric) { return metric_trace(m, ric); }

Matrix schouten(const MetricLieAlgebra& m, const Matrix& ric, const Scalar& rho) {
  const long n = static_cast<long>(m.dim());
  if (n <= 2) throw ContractViolation("Schouten tensor needs dimension > 2");
  Scalar j = rho / Scalar(2 * (n - 1));
  return (ric - m.metric() * j) * Scalar::rational(1, n - 2);
}

Tensor weyl(const MetricLieAlgebra& m, const Tensor& r, const Matrix& p) {
  const auto& g = m.metric();
  const std::size_t n = m.dim();
  Tensor c = r;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc)
        for (std::size_t d = 0; d < n; ++d) {
          Scalar& e = c(a, b, cc, d);
          if (!g(a, cc).is_zero() && !p(d, b).is_zero()) e += g(a, cc) * p(d, b);
          if (!g(a, d).is_zero() && !p(cc, b).is_zero()) e -= g(a, d) * p(cc, b);
          if (!g(b, d).is_zero() && !p(cc, a).is_zero()) e += g(b, d) * p(cc, a);
          if (!g(b, cc).is_zero() && !p(d, a).is_zero()) e -= g(b, cc) * p(d, a);
        }
  return c;
}

Tensor covariant_derivative(const MetricLieAlgebra& m, const Tensor& t) {
  const auto& l = m.algebra();
  const std::size_t n = m.dim();
  const std::size_t rank = t.rank();
  // For each m: the pairs (x, i) with c_{x i}^m != 0.
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> into(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [k, v] : l.bracket_terms(x, i)) into[k].emplace_back(x, i, v);

  Tensor out(n, rank + 1);
  const Scalar half = Scalar::rational(-1, 2);
  std::vector<std::size_t> idx(rank), oidx(rank + 1);
  const auto& data = t.data();
  for (std::size_t flat = 0; flat < data.size(); ++flat) {
    if (data[flat].is_zero()) continue;
    std::size_t rest = flat;
    for (std::size_t s = rank; s-- > 0;) {
      idx[s] = rest % n;
      rest /= n;
    }
    Scalar base = half * data[flat];
    for (std::size_t s = 0; s < rank; ++s) {
      for (const auto& [x, i, v] : into[idx[s]]) {
        oidx[0] = x;
        for (std::size_t u = 0; u < rank; ++u) oidx[u + 1] = u == s ? i : idx[u];
        out.at(oidx) += base * v;
      }
    }
  }
  return out;
}

Tensor cotton(const MetricLieAlgebra& m, const Matrix& p) {
  Tensor dp = covariant_derivative(m, Tensor::from_matrix(p));
  const std::size_t n = m.dim();
  Tensor a(n, 3);
  const Scalar half = Scalar::rational(1, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) a(i, b, c) = half * (dp(b, c, i) - dp(c, b, i));
  return a;
}

Matrix ricci_squared_direct(const MetricLieAlgebra& m, const Matrix& ric) {
  return ric * m.metric_inverse() * ric;
}

Matrix ricci_squared_killing(const MetricLieAlgebra& m) {
  const auto& l = m.algebra();
  const auto& gi = m.metric_inverse();
  const std::size_t n = m.dim();
  Matrix k = l.killing_form();
  // t(a, kk, q) = sum_p c_{a kk}^p K_pq
  Tensor t(n, 3);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t kk = 0; kk < n; ++kk)
      for (const auto& [p, v] : l.bracket_terms(a, kk))
        for (std::size_t q = 0; q < n; ++q)
          if (!k(p, q).is_zero()) t(a, kk, q) += v * k(p, q);
  Matrix out(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Scalar s;
      for (std::size_t kk = 0; kk < n; ++kk)
        for (std::size_t ll = 0; ll < n; ++ll) {
          if (gi(kk, ll).is_zero()) continue;
          for (const auto& [q, v] : l.bracket_terms(b, ll))
            if (!t(a, kk, q).is_zero()) s += gi(kk, ll) * t(a, kk, q) * v;
        }
      out(a, b) = s * Scalar::rational(-1, 16);
    }
  return out;
}

Matrix ricci_squared_riemann(const MetricLieAlgebra& m, const Matrix& ric, const Tensor& r) {
  const std::size_t n = m.dim();
  Matrix up = m.metric_inverse() * ric * m.metric_inverse();
  Matrix out(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (up(p, q).is_zero()) continue;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (!r(p, a, b, q).is_zero()) out(a, b) += up(p, q) * r(p, a, b, q);
    }
  return out;
}

Matrix bach_closed_form(const MetricLieAlgebra& m, const Matrix& ric, const Matrix& ric2, const Scalar& rho) {
  const long n = static_cast<long>(m.dim());
  if (n <= 2) throw ContractViolation("Bach tensor needs dimension > 2");
  Scalar tr2 = metric_trace(m, ric2);
  Scalar nn(n), n1(n - 1);
  Matrix b = ric2 * nn - ric * (nn * rho / n1) + m.metric() * (rho * rho / n1 - tr2);
  return b * Scalar::rational(1, (n - 2) * (n - 2));
}

Matrix bach_from_weyl(const MetricLieAlgebra& m, const Matrix& p, const Tensor& c) {
  const std::size_t n = m.dim();
  Matrix up = m.metric_inverse() * p * m.metric_inverse();
  Matrix out(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t d = 0; d < n; ++d) {
      if (up(a, d).is_zero()) continue;
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t cc = 0; cc < n; ++cc)
          if (!c(a, b, cc, d).is_zero()) out(b, cc) += up(a, d) * c(a, b, cc, d);
    }
  return out;
}

std::vector<std::string> riemann_symmetry_violations(const Tensor& r) {
  std::vector<std::string> out;
  const std::size_t n = r.dim();
  auto where = [](const char* what, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return std::string(what) + " at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
           "," + std::to_string(l) + ")";
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Scalar& x = r(i, j, k, l);
          if (x != -r(j, i, k, l)) out.push_back(where("R_ijkl != -R_jikl", i, j, k, l));
          if (x != -r(i, j, l, k)) out.push_back(where("R_ijkl != -R_ijlk", i, j, k, l));
          if (x != r(k, l, i, j)) out.push_back(where("R_ijkl != R_klij", i, j, k, l));
          if (!(x + r(j, k, i, l) + r(k, i, j, l)).is_zero()) out.push_back(where("first Bianchi identity", i, j, k, l));
          if (out.size() >= 8) return out;
        }
  return out;
}

CurvatureBundle compute_curvature(const MetricLieAlgebra& m) {
  CurvatureBundle b;
  const std::size_t n = m.dim();
  b.n = n;
  b.riemann = riemann(m);
  auto sym = riemann_symmetry_violations(b.riemann);
  require(sym.empty(), "curvature tensor symmetry: " + (sym.empty() ? std::string() : sym.front()));
  require(covariant_derivative(m, b.riemann).is_zero(), "curvature tensor is not ad-invariant");

  b.ricci = ricci_from_riemann(m, b.riemann);
  require(b.ricci == ricci_from_killing(m), "Ricci by trace differs from -1/4 Killing form");
  require(b.ricci.is_symmetric(), "Ricci tensor is not symmetric");
  require(covariant_derivative(m, Tensor::from_matrix(m.metric())).is_zero(), "metric is not parallel");
  require(covariant_derivative(m, Tensor::from_matrix(b.ricci)).is_zero(), "Ricci tensor is not parallel");
  b.rho = scalar_curvature(m, b.ricci);

  b.ricci_squared = ricci_squared_direct(m, b.ricci);
  require(b.ricci_squared == ricci_squared_killing(m), "Ric^2 via Killing form differs");
  require(b.ricci_squared == ricci_squared_riemann(m, b.ricci, b.riemann), "Ric^2 via curvature tensor differs");
  b.trace_ricci_squared = metric_trace(m, b.ricci_squared);

  if (n > 2) {
    b.schouten = schouten(m, b.ricci, b.rho);
    b.j = b.rho / Scalar(2 * static_cast<long>(n - 1));
    require(metric_trace(m, *b.schouten) == *b.j, "trace of Schouten tensor differs from J");
    require(covariant_derivative(m, Tensor::from_matrix(*b.schouten)).is_zero(), "Schouten tensor is not parallel");
    require(cotton(m, *b.schouten).is_zero(), "Cotton tensor does not vanish");
    b.weyl = weyl(m, b.riemann, *b.schouten);
    // Trace-freeness: g^{ad} C_abcd = 0.
    const auto& gi = m.metric_inverse();
    for (std::size_t bb = 0; bb < n; ++bb)
      for (std::size_t c = 0; c < n; ++c) {
        Scalar t;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t d = 0; d < n; ++d)
            if (!gi(a, d).is_zero()) t += gi(a, d) * (*b.weyl)(a, bb, c, d);
        require(t.is_zero(), "Weyl tensor is not trace-free");
      }
    b.bach = bach_closed_form(m, b.ricci, b.ricci_squared, b.rho);
    require(*b.bach == bach_from_weyl(m, *b.schouten, *b.weyl), "Bach tensor routes disagree");
    require(b.bach->is_symmetric(), "Bach tensor is not symmetric");
  }
  return b;
}

}  // namespace metla
