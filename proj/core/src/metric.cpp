#include "metla/metric.hpp"

#include "metla/errors.hpp"

namespace metla {

namespace {

template <typename T>
const T& param(const Provenance& p, const std::string& key) {
  auto it = p.params.find(key);
  if (it == p.params.end()) throw ContractViolation("provenance of '" + p.family + "' has no parameter " + key);
  const T* v = std::get_if<T>(&it->second);
  if (!v) throw ContractViolation("provenance parameter " + key + " has the wrong type");
  return *v;
}

}  // namespace

std::int64_t Provenance::integer(const std::string& key) const { return param<std::int64_t>(*this, key); }
const Scalar& Provenance::scalar(const std::string& key) const { return param<Scalar>(*this, key); }
const Matrix& Provenance::matrix(const std::string& key) const { return param<Matrix>(*this, key); }

std::optional<std::string> invariance_witness(const LieAlgebra& l, const Matrix& g) {
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        Scalar s;
        for (const auto& [m, v] : l.bracket_terms(i, j)) s += v * g(m, k);
        for (const auto& [m, v] : l.bracket_terms(i, k)) s += v * g(j, m);
        if (!s.is_zero()) {
          const auto& lab = l.labels();
          return "(" + lab[i] + "," + lab[j] + "," + lab[k] + ")";
        }
      }
  return std::nullopt;
}

MetricLieAlgebra::MetricLieAlgebra(LieAlgebra algebra, Matrix metric, Provenance provenance)
    : algebra_(std::move(algebra)), g_(std::move(metric)), provenance_(std::move(provenance)) {
  const std::size_t n = algebra_.dim();
  if (g_.rows() != n || g_.cols() != n) throw ContractViolation("metric size does not match algebra dimension");
  if (!g_.is_symmetric()) throw InvalidInput("metric is not symmetric");
  try {
    g_inv_ = inverse(g_);
  } catch (const DivisionByZero&) {
    throw InvalidInput("degenerate metric");
  }
  if (auto w = invariance_witness(algebra_, g_)) throw InvalidInput("not bi-invariant at " + *w);
}

Scalar MetricLieAlgebra::inner(const Vector& x, const Vector& y) const { return dot(x, g_ * y); }
Vector MetricLieAlgebra::lower(const Vector& x) const { return g_ * x; }
Vector MetricLieAlgebra::raise(const Vector& alpha) const { return g_inv_ * alpha; }

}  // namespace metla
