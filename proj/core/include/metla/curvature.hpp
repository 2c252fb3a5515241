#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "metla/metric.hpp"

namespace metla {

/// Dense covariant tensor with every index running over 0..n-1.
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::size_t n, std::size_t rank);

  std::size_t dim() const { return n_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Scalar>& data() const { return data_; }
  bool is_zero() const;

  template <typename... I>
  Scalar& operator()(I... idx) {
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }
  template <typename... I>
  const Scalar& operator()(I... idx) const {
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }
  Scalar& at(const std::vector<std::size_t>& idx) { return data_[offset(idx)]; }
  const Scalar& at(const std::vector<std::size_t>& idx) const { return data_[offset(idx)]; }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.n_ == b.n_ && a.rank_ == b.rank_ && a.data_ == b.data_;
  }

  static Tensor from_matrix(const Matrix& m);
  Matrix to_matrix() const;

 private:
  std::size_t offset(const std::vector<std::size_t>& idx) const;
  std::size_t n_ = 0;
  std::size_t rank_ = 0;
  std::vector<Scalar> data_;
};

/// R_{ijkl} = -1/4 <[[e_i,e_j],e_k],e_l>.
Tensor riemann(const MetricLieAlgebra& m);
/// Ric_{ij} = g^{kl} R_{kijl}.
Matrix ricci_from_riemann(const MetricLieAlgebra& m, const Tensor& r);
/// Ric = -1/4 Killing form.
Matrix ricci_from_killing(const MetricLieAlgebra& m);
Scalar scalar_curvature(const MetricLieAlgebra& m, const Matrix& ric);
/// P = (Ric - rho/(2(n-1)) g)/(n-2). Requires n > 2.
Matrix schouten(const MetricLieAlgebra& m, const Matrix& ric, const Scalar& rho);
/// C_{abcd} = R_{abcd} + g_ac P_db - g_ad P_cb + g_bd P_ca - g_bc P_da.
Tensor weyl(const MetricLieAlgebra& m, const Tensor& r, const Matrix& p);

/// (nabla T)_{x i1..ik} = -1/2 sum_s T(.., [e_x, e_is], ..).
Tensor covariant_derivative(const MetricLieAlgebra& m, const Tensor& t);
/// A_{abc} = 1/2 (nabla_b P_ca - nabla_c P_ba).
Tensor cotton(const MetricLieAlgebra& m, const Matrix& p);

/// Ric^2 as R_a^p R_pb.
Matrix ricci_squared_direct(const MetricLieAlgebra& m, const Matrix& ric);
/// Ric^2 as -1/16 g^{kl} c_ak^p c_bl^q K_pq.
Matrix ricci_squared_killing(const MetricLieAlgebra& m);
/// Ric^2 as R^{pq} R_{pabq}.
Matrix ricci_squared_riemann(const MetricLieAlgebra& m, const Matrix& ric, const Tensor& r);

/// (n-2)^2 B = n Ric^2 - n rho/(n-1) Ric + (rho^2/(n-1) - tr Ric^2) g.
Matrix bach_closed_form(const MetricLieAlgebra& m, const Matrix& ric, const Matrix& ric2, const Scalar& rho);
/// B_bc = P^{ad} C_{abcd}; valid because the Cotton tensor vanishes.
Matrix bach_from_weyl(const MetricLieAlgebra& m, const Matrix& p, const Tensor& c);

/// Index-symmetry and first Bianchi violations of an algebraic curvature tensor.
std::vector<std::string> riemann_symmetry_violations(const Tensor& r);

/// Every curvature quantity, computed by independent routes and cross-checked.
/// Throws InvariantViolation when two routes disagree.
struct CurvatureBundle {
  std::size_t n = 0;
  Tensor riemann;
  Matrix ricci;
  Scalar rho;
  Matrix ricci_squared;
  Scalar trace_ricci_squared;
  std::optional<Matrix> schouten;
  std::optional<Scalar> j;
  std::optional<Tensor> weyl;
  std::optional<Matrix> bach;
};

CurvatureBundle compute_curvature(const MetricLieAlgebra& m);

/// Contraction with the inverse metric: g^{ij} s_ij.
Scalar metric_trace(const MetricLieAlgebra& m, const Matrix& s);
/// Endomorphism A = g^{-1} S of a symmetric bilinear form, S(X,Y) = g(AX,Y).
Matrix raise_first(const MetricLieAlgebra& m, const Matrix& s);

}  // namespace metla
