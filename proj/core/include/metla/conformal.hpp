#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metla/curvature.hpp"
#include "metla/double_extension.hpp"

namespace metla {

/// Ric == (rho/n) g.
bool is_einstein(const MetricLieAlgebra& m, const CurvatureBundle& c);

enum class BachKind { Einstein, TwoStepNilpotentRicci, TwoEigenvalue, NotBachFlat };
std::string to_string(BachKind k);

/// Ricci endomorphism with two eigenvalues lambda (multiplicity k) and mu.
/// Exact values when they lie in the field, otherwise double approximations
/// only. A complex pair +-i w is diagonalizable over C only; the approximations
/// then carry +-w.
struct TwoEigenvalueData {
  std::optional<Scalar> lambda;
  std::optional<Scalar> mu;
  double lambda_approx = 0;
  double mu_approx = 0;
  bool complex_pair = false;
  std::size_t k = 0;
  Scalar b;  ///< Ric^2 + b Ric + c g = 0
  Scalar c;
};

struct BachClass {
  BachKind kind = BachKind::NotBachFlat;
  std::optional<TwoEigenvalueData> two;
};

/// Decides Bach-flatness by the tensor itself, then sorts Bach-flat metrics by the
/// shape of the Ricci endomorphism. Throws InvariantViolation when a Bach-flat
/// metric fits none of the three shapes or breaks mu(k-1) = -(n-k-1) lambda.
BachClass classify_bach(const MetricLieAlgebra& m, const CurvatureBundle& c);

/// n = {X : C(., ., ., X) = 0}; verified to be an ideal.
Subspace weyl_nullity_ideal(const MetricLieAlgebra& m, const CurvatureBundle& c);

/// Bach-flatness and a nonzero Weyl nullity ideal are necessary for a
/// non-Einstein metric to be conformally Einstein; the nullity part is only
/// required in dimension > 4.
struct ObstructionReport {
  bool bach_flat = false;
  bool einstein = false;
  bool weyl_zero = false;
  Subspace nullity;
  bool nullity_required = true;
  bool pass = false;
  std::optional<Vector> witness;
  std::vector<std::string> notes;
};

ObstructionReport necessary_conditions(const MetricLieAlgebra& m, const CurvatureBundle& c);

enum class RExtensionStatus { TriviallySatisfied, NotApplicable, Solved };
std::string to_string(RExtensionStatus s);

/// Linear system for V = V- e- + V^ (V^ in h) that a non-Einstein conformally
/// Einstein line extension must admit with V != 0. Solutions are vectors
/// (V-, V^1..V^m).
struct RExtensionObstruction {
  RExtensionStatus status = RExtensionStatus::NotApplicable;
  Subspace solutions;
  bool fails() const { return status == RExtensionStatus::Solved && solutions.is_zero(); }
};

RExtensionObstruction r_extension_obstruction(const RExtension& e);

enum class OscExtensionOutcome { FirstAlternative, DegenerateTraceForm, NotConformallyEinstein };
std::string to_string(OscExtensionOutcome o);

/// Necessary conditions for the extension of osc_Phi(t, s) by (Psi, 0) to be
/// conformally Einstein, reduced to traces of Psi and Phi.
struct OscExtensionCheck {
  Scalar tr_phi2;
  Scalar tr_psi2;
  Scalar tr_psi_phi;
  Matrix b;  ///< [[tr Phi^2, -tr Psi Phi], [-tr Psi Phi, tr Psi^2]]
  Scalar det_b;
  bool independent = false;
  Subspace joint_eigenvectors;  ///< W with Psi^2 W, Phi^2 W, Psi Phi W = tr(.)/(l+2) W
  OscExtensionOutcome outcome = OscExtensionOutcome::FirstAlternative;
};

OscExtensionCheck osc_extension_check(const Matrix& psi, const Matrix& phi, std::size_t t, std::size_t s);

enum class Verdict {
  Einstein,
  ConformallyEinsteinByTheorem,
  ObstructionsPassUndecided,
  NotConformallyEinsteinByTheorem,
  FailsObstructions
};
std::string to_string(Verdict v);

struct VerdictResult {
  Verdict verdict = Verdict::ObstructionsPassUndecided;
  std::vector<std::string> citations;
};

/// Combines the general obstructions with the family-specific results that the
/// provenance tag of m makes available.
VerdictResult decide_verdict(const MetricLieAlgebra& m, const ObstructionReport& o,
                             const std::optional<RExtension>& line_extension);

}  // namespace metla
