#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "metla/linalg.hpp"

namespace metla {

/// Linear subspace of K^n stored as the nonzero rows of its reduced row
/// echelon form, so equal subspaces have identical bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c(i, j, k) e_k. Construction does not validate; call
/// validate() or use checked().
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::vector<std::string> labels, std::vector<Scalar> constants);
  /// n-dimensional abelian algebra with labels e1..en.
  static LieAlgebra abelian(std::size_t n);
  /// Structure constants from an explicit list of nonzero brackets with i < j.
  static LieAlgebra from_brackets(std::vector<std::string> labels,
                                  const std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vector>>& brackets);
  /// Throws InvalidInput listing every violated identity.
  static LieAlgebra checked(std::vector<std::string> labels, std::vector<Scalar> constants);

  std::size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Scalar>& constants() const { return c_; }

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
  /// Nonzero (k, c_ij^k) pairs of [e_i, e_j].
  const std::vector<std::pair<std::size_t, Scalar>>& bracket_terms(std::size_t i, std::size_t j) const {
    return sparse_[i * n_ + j];
  }

  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad_X acting on column vectors: (ad_X)_{kj} = sum_i X^i c_ij^k.
  Matrix ad(const Vector& x) const;
  Matrix ad_basis(std::size_t i) const;

  /// Violated identities, each naming the offending indices. Empty when valid.
  std::vector<std::string> validate() const;

  Matrix killing_form() const;

  std::vector<Subspace> derived_series() const;
  std::vector<Subspace> lower_central_series() const;
  bool is_solvable() const;
  bool is_nilpotent() const;
  Subspace center() const;
  /// span{[a, b] : a in A, b in B}.
  Subspace bracket_span(const Subspace& a, const Subspace& b) const;
  bool is_ideal(const Subspace& s) const;

  /// Derivations as a subspace of flattened n x n matrices (row-major).
  Subspace derivations() const;
  Subspace inner_derivations() const;

  bool is_abelian() const;

 private:
  void build_sparse();

  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Scalar> c_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse_;
};

/// Flattens a square matrix row-major.
Vector flatten(const Matrix& m);
Matrix unflatten(const Vector& v, std::size_t n);

}  // namespace metla
