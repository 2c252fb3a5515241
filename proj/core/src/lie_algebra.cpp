#include "metla/lie_algebra.hpp"

#include "metla/errors.hpp"

namespace metla {

namespace {

constexpr std::size_t kMaxReportedViolations = 32;

std::vector<Vector> nonzero_rows(const EchelonForm& e) {
  std::vector<Vector> rows;
  rows.reserve(e.pivots.size());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) rows.push_back(e.reduced.row(r));
  return rows;
}

}  // namespace

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s(ambient);
  std::vector<Vector> useful;
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw ContractViolation("span: vector length does not match ambient dimension");
    if (!metla::is_zero(v)) useful.push_back(v);
  }
  if (useful.empty()) return s;
  s.basis_ = nonzero_rows(row_reduce(Matrix::from_rows(useful, ambient)));
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  std::vector<Vector> unit;
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector v(ambient);
    v[i] = 1;
    unit.push_back(std::move(v));
  }
  return span(ambient, unit);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw ContractViolation("contains: vector length mismatch");
  if (metla::is_zero(v)) return true;
  std::vector<Vector> rows = basis_;
  rows.push_back(v);
  return rank(Matrix::from_rows(rows, ambient_)) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw ContractViolation("sum of subspaces in different spaces");
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw ContractViolation("intersection of subspaces in different spaces");
  if (is_zero() || other.is_zero()) return Subspace(ambient_);
  // Solve sum a_i u_i - sum b_j w_j = 0; the a-part gives the intersection.
  const std::size_t p = basis_.size(), q = other.basis_.size();
  Matrix m(ambient_, p + q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, i) = basis_[i][r];
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, p + j) = -other.basis_[j][r];
  std::vector<Vector> vectors;
  for (const auto& coeffs : nullspace(m)) {
    Vector v(ambient_);
    for (std::size_t i = 0; i < p; ++i)
      if (!coeffs[i].is_zero()) v = v + coeffs[i] * basis_[i];
    vectors.push_back(std::move(v));
  }
  return span(ambient_, vectors);
}

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<Scalar> constants)
    : n_(labels.size()), labels_(std::move(labels)), c_(std::move(constants)) {
  if (c_.size() != n_ * n_ * n_) throw ContractViolation("structure constant array must have n^3 entries");
  build_sparse();
}

void LieAlgebra::build_sparse() {
  sparse_.assign(n_ * n_, {});
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (!c(i, j, k).is_zero()) sparse_[i * n_ + j].emplace_back(k, c(i, j, k));
}

LieAlgebra LieAlgebra::abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  return LieAlgebra(std::move(labels), std::vector<Scalar>(n * n * n));
}

LieAlgebra LieAlgebra::from_brackets(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vector>>& brackets) {
  const std::size_t n = labels.size();
  std::vector<Scalar> c(n * n * n);
  for (const auto& [ij, v] : brackets) {
    auto [i, j] = ij;
    if (i >= n || j >= n || v.size() != n) throw ContractViolation("from_brackets: index out of range");
    for (std::size_t k = 0; k < n; ++k) {
      c[(i * n + j) * n + k] = v[k];
      c[(j * n + i) * n + k] = -v[k];
    }
  }
  return LieAlgebra(std::move(labels), std::move(c));
}

LieAlgebra LieAlgebra::checked(std::vector<std::string> labels, std::vector<Scalar> constants) {
  LieAlgebra l(std::move(labels), std::move(constants));
  auto problems = l.validate();
  if (!problems.empty()) throw InvalidInput(std::move(problems));
  return l;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != n_ || y.size() != n_) throw ContractViolation("bracket: vector length mismatch");
  Vector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      const auto& terms = bracket_terms(i, j);
      if (terms.empty()) continue;
      Scalar xy = x[i] * y[j];
      for (const auto& [k, v] : terms) out[k] += xy * v;
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  if (x.size() != n_) throw ContractViolation("ad: vector length mismatch");
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j)
      for (const auto& [k, v] : bracket_terms(i, j)) m(k, j) += x[i] * v;
  }
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const {
  Matrix m(n_, n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (const auto& [k, v] : bracket_terms(i, j)) m(k, j) = v;
  return m;
}

std::vector<std::string> LieAlgebra::validate() const {
  std::vector<std::string> problems;
  auto report = [&](std::string msg) {
    if (problems.size() < kMaxReportedViolations) problems.push_back(std::move(msg));
  };
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (c(i, j, k) + c(j, i, k) != Scalar(0))
          report("antisymmetry violated at c(" + labels_[i] + "," + labels_[j] + ";" + labels_[k] + ")");
  if (!problems.empty()) return problems;
  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = j + 1; k < n_; ++k) {
        Vector sum(n_);
        auto add = [&](std::size_t a, std::size_t b, std::size_t e) {
          for (const auto& [m, v] : bracket_terms(a, b))
            for (const auto& [l, w] : bracket_terms(m, e)) sum[l] += v * w;
        };
        add(i, j, k);
        add(j, k, i);
        add(k, i, j);
        if (!is_zero(sum))
          report("Jacobi identity violated at (" + labels_[i] + "," + labels_[j] + "," + labels_[k] + ")");
      }
  return problems;
}

Matrix LieAlgebra::killing_form() const {
  std::vector<Matrix> ads;
  ads.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) ads.push_back(ad_basis(i));
  Matrix k(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) {
      Scalar t;
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
          if (!ads[i](a, b).is_zero() && !ads[j](b, a).is_zero()) t += ads[i](a, b) * ads[j](b, a);
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

Subspace LieAlgebra::bracket_span(const Subspace& a, const Subspace& b) const {
  std::vector<Vector> vs;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) vs.push_back(bracket(x, y));
  return Subspace::span(n_, vs);
}

std::vector<Subspace> LieAlgebra::derived_series() const {
  std::vector<Subspace> series{Subspace::whole(n_)};
  while (true) {
    Subspace next = bracket_span(series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subspace> LieAlgebra::lower_central_series() const {
  Subspace all = Subspace::whole(n_);
  std::vector<Subspace> series{all};
  while (true) {
    Subspace next = bracket_span(all, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool LieAlgebra::is_solvable() const { return derived_series().back().is_zero(); }
bool LieAlgebra::is_nilpotent() const { return lower_central_series().back().is_zero(); }

bool LieAlgebra::is_abelian() const {
  for (const auto& terms : sparse_)
    if (!terms.empty()) return false;
  return true;
}

Subspace LieAlgebra::center() const {
  Matrix m(n_ * n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (const auto& [k, v] : bracket_terms(i, j)) m(j * n_ + k, i) = v;
  return Subspace::span(n_, nullspace(m));
}

bool LieAlgebra::is_ideal(const Subspace& s) const {
  for (const auto& v : s.basis())
    for (std::size_t j = 0; j < n_; ++j) {
      Vector e(n_);
      e[j] = 1;
      if (!s.contains(bracket(e, v))) return false;
    }
  return true;
}

Subspace LieAlgebra::derivations() const {
  const std::size_t n = n_;
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector row(n * n);
        for (const auto& [m, v] : bracket_terms(i, j)) row[k * n + m] += v;
        for (std::size_t m = 0; m < n; ++m) {
          const Scalar& a = c(m, j, k);
          if (!a.is_zero()) row[m * n + i] -= a;
          const Scalar& b = c(i, m, k);
          if (!b.is_zero()) row[m * n + j] -= b;
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  if (rows.empty()) return Subspace::whole(n * n);
  return Subspace::span(n * n, nullspace(Matrix::from_rows(rows, n * n)));
}

Subspace LieAlgebra::inner_derivations() const {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < n_; ++i) vs.push_back(flatten(ad_basis(i)));
  return Subspace::span(n_ * n_, vs);
}

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

Matrix unflatten(const Vector& v, std::size_t n) {
  if (v.size() != n * n) throw ContractViolation("unflatten: length is not n^2");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

}  // namespace metla
