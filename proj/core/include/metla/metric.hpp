#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "metla/lie_algebra.hpp"

namespace metla {

using ParamValue = std::variant<std::int64_t, Scalar, Matrix>;

/// Where an algebra came from: a catalog family key and its parameters.
/// Verdicts that rest on a classification result consult this tag.
struct Provenance {
  std::string family;
  std::map<std::string, ParamValue> params;

  bool empty() const { return family.empty(); }
  std::int64_t integer(const std::string& key) const;
  const Scalar& scalar(const std::string& key) const;
  const Matrix& matrix(const std::string& key) const;
};

/// Lie algebra with a nondegenerate ad-invariant symmetric bilinear form.
class MetricLieAlgebra {
 public:
  /// Throws InvalidInput with "degenerate metric" or "not bi-invariant"
  /// (naming a witness triple) when g fails the requirements.
  MetricLieAlgebra(LieAlgebra algebra, Matrix metric, Provenance provenance = {});

  const LieAlgebra& algebra() const { return algebra_; }
  const Matrix& metric() const { return g_; }
  const Matrix& metric_inverse() const { return g_inv_; }
  const Provenance& provenance() const { return provenance_; }
  void set_provenance(Provenance p) { provenance_ = std::move(p); }
  std::size_t dim() const { return algebra_.dim(); }

  Signature signature() const { return signature_of_symmetric(g_); }
  Scalar inner(const Vector& x, const Vector& y) const;
  /// X^flat_i = g_ij X^j.
  Vector lower(const Vector& x) const;
  /// alpha^sharp^i = g^ij alpha_j.
  Vector raise(const Vector& alpha) const;

 private:
  LieAlgebra algebra_;
  Matrix g_;
  Matrix g_inv_;
  Provenance provenance_;
};

/// First (i, j, k) with <[e_i,e_j],e_k> + <e_j,[e_i,e_k]> != 0, if any.
std::optional<std::string> invariance_witness(const LieAlgebra& algebra, const Matrix& metric);

}  // namespace metla
