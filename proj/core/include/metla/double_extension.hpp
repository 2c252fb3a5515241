#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metla/metric.hpp"

namespace metla {

/// Input of a double extension of the metric Lie algebra h by s.
struct DoubleExtensionSpec {
  MetricLieAlgebra h;
  LieAlgebra s;
  Matrix b;                   ///< ad-invariant symmetric form on s (may be degenerate)
  std::vector<Matrix> delta;  ///< delta[i] = delta(S_i), a skew derivation of h
  std::vector<std::string> dual_labels;  ///< labels for the dual basis of s*; defaults to "<S>*"
};

/// d = s* + h + s with basis order (s*, h, s).
///
/// [S, sigma] = -sigma o ad_S (the coadjoint action), [X, Y] = [X, Y]_h + <delta_. X, Y>,
/// [S, X] = delta_S X; the metric pairs s* with s, restricts to h on h and to b on s.
struct DoubleExtension {
  DoubleExtensionSpec spec;
  MetricLieAlgebra g;
  std::vector<std::string> notes;

  std::size_t dim_s() const { return spec.s.dim(); }
  std::size_t dim_h() const { return spec.h.dim(); }
  std::size_t dual_index(std::size_t i) const { return i; }
  std::size_t h_index(std::size_t a) const { return dim_s() + a; }
  std::size_t s_index(std::size_t i) const { return dim_s() + dim_h() + i; }
};

/// Validates the spec and builds the extension. Throws InvalidInput naming the
/// first failing requirement (skewness, derivation, homomorphism, invariance of b).
DoubleExtension double_extend(DoubleExtensionSpec spec);

/// Violations of the block description of the Ricci tensor of a double extension.
std::vector<std::string> double_extension_ricci_violations(const DoubleExtension& e, const Matrix& ric);

/// For abelian s: the b = 0 extension together with F, F(S_i) = S_i - 1/2 b_ik sigma^k,
/// an isomorphism onto the original extension with <F x, F y>_b = <x, y>_0.
struct NormalizedExtension {
  DoubleExtension normalized;
  Matrix f;
};
NormalizedExtension normalize_abelian_b(const DoubleExtensionSpec& spec);

/// Double extension by a line: g = R e- + h + R e+ with derivation delta.
struct RExtension {
  MetricLieAlgebra g;
  MetricLieAlgebra h;
  Matrix delta;
  Vector eta;  ///< eta_a = tr(delta o ad_{e_a})

  std::size_t m() const { return h.dim(); }
  std::size_t minus_index() const { return 0; }
  std::size_t plus_index() const { return h.dim() + 1; }
};

RExtension r_extension(const MetricLieAlgebra& h, const Matrix& delta, const std::string& minus_label = "e-",
                       const std::string& plus_label = "e+");

/// Matrix of the form diag(-1 (t times), 1 (s times)).
Matrix pseudo_euclidean(std::size_t t, std::size_t s);
/// True when phi is skew for diag(-1^t, 1^s).
bool in_so(const Matrix& phi, std::size_t t);

/// Oscillator algebra osc_Phi(t, s): basis e0, e1..el, e(l+1), metric 2 r rho + <,>_{t,s}.
/// Rejects phi outside so(t, s) and singular phi.
RExtension oscillator(std::size_t t, std::size_t s, const Matrix& phi);

/// Extension of osc_Phi(t, s) by delta = (Psi, 0). Requires Psi in so(t, s) and [Phi, Psi] = 0.
RExtension g_psi_phi(const Matrix& psi, const Matrix& phi, std::size_t t, std::size_t s);

/// Extension of h = osc_Phi(l) + R e(l+2) (the line with <e(l+2), e(l+2)> = 1) by
/// delta(X) = Psi X, delta(e(l+1)) = c e(l+2), delta(e(l+2)) = -c e0, with c = 1
/// when normalized and c = 0 otherwise. Rejects Phi = 0.
RExtension osc_plus_line(const Matrix& phi, const Matrix& psi, bool c_normalized = true);

}  // namespace metla
