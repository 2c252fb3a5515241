#include "metla/conformal.hpp"

#include <cmath>

#include "metla/errors.hpp"

namespace metla {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

}  // namespace

bool is_einstein(const MetricLieAlgebra& m, const CurvatureBundle& c) {
  Scalar lambda = c.rho / Scalar(static_cast<long>(m.dim()));
  return c.ricci == m.metric() * lambda;
}

std::string to_string(BachKind k) {
  switch (k) {
    case BachKind::Einstein: return "einstein";
    case BachKind::TwoStepNilpotentRicci: return "two_step_nilpotent_ricci";
    case BachKind::TwoEigenvalue: return "two_eigenvalue";
    case BachKind::NotBachFlat: return "not_bach_flat";
  }
  return "unknown";
}

BachClass classify_bach(const MetricLieAlgebra& m, const CurvatureBundle& c) {
  if (!c.bach) throw ContractViolation("Bach tensor needs dimension > 2");
  BachClass out;
  if (!c.bach->is_zero()) {
    out.kind = BachKind::NotBachFlat;
    return out;
  }
  if (is_einstein(m, c)) {
    out.kind = BachKind::Einstein;
    return out;
  }
  const std::size_t n = m.dim();
  Matrix a = raise_first(m, c.ricci);
  if ((a * a).is_zero()) {
    require(c.rho.is_zero(), "two-step nilpotent Ricci endomorphism with nonzero scalar curvature");
    out.kind = BachKind::TwoStepNilpotentRicci;
    return out;
  }
  auto rel = quadratic_relation(a);
  require(rel.has_value(), "Bach-flat metric whose Ricci endomorphism has no quadratic relation");
  TwoEigenvalueData d;
  d.b = rel->first;
  d.c = rel->second;
  Scalar disc = d.b * d.b - Scalar(4) * d.c;
  double bd = d.b.to_double(), discd = disc.to_double();
  require(!disc.is_zero(), "Bach-flat Ricci endomorphism is a nonzero multiple of the identity plus a nilpotent");
  d.complex_pair = disc.sign() < 0;
  if (d.complex_pair) {
    // lambda, mu = -b/2 +- i sqrt(-disc)/2; the approximations hold the imaginary parts.
    d.lambda_approx = std::sqrt(-discd) / 2;
    d.mu_approx = -d.lambda_approx;
  } else {
    d.lambda_approx = (-bd + std::sqrt(discd)) / 2;
    d.mu_approx = (-bd - std::sqrt(discd)) / 2;
  }

  const Scalar half = Scalar::rational(1, 2);
  if (auto root = disc.sqrt_in_field()) {
    Scalar r1 = (-d.b + *root) * half, r2 = (-d.b - *root) * half;
    if (r1.is_zero()) std::swap(r1, r2);
    d.lambda = r1;
    d.mu = r2;
    d.lambda_approx = r1.to_double();
    d.mu_approx = r2.to_double();
    Matrix id = Matrix::identity(n);
    d.k = n - rank(a - id * r1);
    std::size_t k_mu = n - rank(a - id * r2);
    require(d.k + k_mu == n, "Ricci endomorphism is not diagonalizable");
    const long kk = static_cast<long>(d.k), nn = static_cast<long>(n);
    require(r2 * Scalar(kk - 1) == -Scalar(nn - kk - 1) * r1, "eigenvalue relation mu(k-1) = -(n-k-1) lambda fails");
    for (const Scalar& ev : {r1, r2}) {
      auto basis = nullspace(a - id * ev);
      Matrix e = Matrix::from_rows(basis, n).transpose();
      require(!determinant(e.transpose() * m.metric() * e).is_zero(), "Ricci eigenspace is degenerate");
    }
  } else {
    // Conjugate eigenvalues outside the field, real irrational or a complex
    // pair: the eigenspaces are conjugate, so both have dimension n/2 and the
    // relation reads (k-1)(lambda+mu) = 0, that is b = 0.
    require(n % 2 == 0, "conjugate Ricci eigenvalues in odd dimension");
    d.k = n / 2;
    require((d.b * Scalar(static_cast<long>(d.k) - 1)).is_zero(), "eigenvalue relation fails for conjugate eigenvalues");
  }
  out.kind = BachKind::TwoEigenvalue;
  out.two = d;
  return out;
}

Subspace weyl_nullity_ideal(const MetricLieAlgebra& m, const CurvatureBundle& c) {
  const std::size_t n = m.dim();
  if (!c.weyl) throw ContractViolation("Weyl tensor needs dimension > 2");
  std::vector<Vector> rows;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc) {
        Vector row(n);
        for (std::size_t x = 0; x < n; ++x) row[x] = (*c.weyl)(a, b, cc, x);
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  Subspace out = rows.empty() ? Subspace::whole(n) : Subspace::span(n, nullspace(Matrix::from_rows(rows, n)));
  require(m.algebra().is_ideal(out), "Weyl nullity space is not an ideal");
  return out;
}

ObstructionReport necessary_conditions(const MetricLieAlgebra& m, const CurvatureBundle& c) {
  const std::size_t n = m.dim();
  if (n < 3) throw ContractViolation("conformal obstructions need dimension >= 3");
  ObstructionReport r;
  r.bach_flat = c.bach->is_zero();
  r.einstein = is_einstein(m, c);
  r.weyl_zero = c.weyl->is_zero();
  r.nullity = weyl_nullity_ideal(m, c);
  r.nullity_required = !r.einstein && n > 4;
  r.pass = r.bach_flat && (r.einstein || !r.nullity_required || !r.nullity.is_zero());
  if (!r.einstein && !r.nullity.is_zero()) r.witness = r.nullity.basis().front();
  if (n <= 4 && !r.einstein) r.notes.push_back("nullity condition not required in dimension <= 4");
  if (!r.bach_flat) r.notes.push_back("Bach tensor does not vanish");
  if (r.nullity_required && r.nullity.is_zero()) r.notes.push_back("Weyl nullity ideal is zero");
  return r;
}

std::string to_string(RExtensionStatus s) {
  switch (s) {
    case RExtensionStatus::TriviallySatisfied: return "trivially_satisfied";
    case RExtensionStatus::NotApplicable: return "not_applicable";
    case RExtensionStatus::Solved: return "solved";
  }
  return "unknown";
}

RExtensionObstruction r_extension_obstruction(const RExtension& e) {
  const auto& h = e.h.algebra();
  const std::size_t m = e.m(), u = m + 1;
  RExtensionObstruction out;
  out.solutions = Subspace(u);
  Matrix kh = h.killing_form();
  if (kh.is_zero() && is_zero(e.eta)) {
    // The whole Ricci tensor sits in the (+,+) slot and e- lies in the nullity ideal.
    out.status = RExtensionStatus::TriviallySatisfied;
    out.solutions = Subspace::span(u, {unit(u, 0)});
    return out;
  }
  if (e.g.dim() <= 4 || e.g.algebra().killing_form().is_zero()) {
    out.status = RExtensionStatus::NotApplicable;
    return out;
  }
  out.status = RExtensionStatus::Solved;

  const Matrix& hm = e.h.metric();
  Matrix ksharp = e.h.metric_inverse() * kh;  // column c is K#(e_c)
  Vector eta_sharp = e.h.metric_inverse() * e.eta;
  Matrix d2 = e.delta * e.delta;
  Scalar tr_d2 = d2.trace();
  const Scalar inv_m = Scalar::rational(1, static_cast<long>(m));
  std::vector<Vector> rows;
  auto push = [&](Vector row) {
    if (!is_zero(row)) rows.push_back(std::move(row));
  };

  // eta(V^) = 0
  {
    Vector row(u);
    for (std::size_t b = 0; b < m; ++b) row[1 + b] = e.eta[b];
    push(std::move(row));
  }
  // delta^2 V^ - 1/m (tr(delta^2) V^ - V- eta#) = 0
  for (std::size_t a = 0; a < m; ++a) {
    Vector row(u);
    row[0] = inv_m * eta_sharp[a];
    for (std::size_t b = 0; b < m; ++b) row[1 + b] = d2(a, b);
    row[1 + a] -= inv_m * tr_d2;
    push(std::move(row));
  }
  // delta o ad_V^ - 1/m (V- K# - V^ (x) eta) = 0, evaluated on e_c, component a
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t a = 0; a < m; ++a) {
      Vector row(u);
      row[0] = -inv_m * ksharp(a, c);
      for (std::size_t b = 0; b < m; ++b)
        for (const auto& [k, v] : h.bracket_terms(b, c))
          if (!e.delta(a, k).is_zero()) row[1 + b] += v * e.delta(a, k);
      row[1 + a] += inv_m * e.eta[c];
      push(std::move(row));
    }
  // ad_V^[X, Y] + 1/m (h(V^, X) K#(Y) - h(V^, Y) K#(X)) = 0 on (e_c, e_f), component a
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t f = c + 1; f < m; ++f)
      for (std::size_t a = 0; a < m; ++a) {
        Vector row(u);
        for (std::size_t b = 0; b < m; ++b) {
          Scalar s;
          for (const auto& [k, v] : h.bracket_terms(c, f)) s += v * h.c(b, k, a);
          s += inv_m * (hm(b, c) * ksharp(a, f) - hm(b, f) * ksharp(a, c));
          row[1 + b] = s;
        }
        push(std::move(row));
      }
  out.solutions = rows.empty() ? Subspace::whole(u) : Subspace::span(u, nullspace(Matrix::from_rows(rows, u)));
  return out;
}

std::string to_string(OscExtensionOutcome o) {
  switch (o) {
    case OscExtensionOutcome::FirstAlternative: return "first_alternative";
    case OscExtensionOutcome::DegenerateTraceForm: return "degenerate_trace_form";
    case OscExtensionOutcome::NotConformallyEinstein: return "not_conformally_einstein";
  }
  return "unknown";
}

OscExtensionCheck osc_extension_check(const Matrix& psi, const Matrix& phi, std::size_t t, std::size_t s) {
  const std::size_t l = t + s;
  if (psi.rows() != l || phi.rows() != l || !psi.is_square() || !phi.is_square())
    throw ContractViolation("Psi and Phi must be (t+s) x (t+s)");
  OscExtensionCheck r;
  r.tr_phi2 = (phi * phi).trace();
  r.tr_psi2 = (psi * psi).trace();
  r.tr_psi_phi = (psi * phi).trace();
  r.b = Matrix{{r.tr_phi2, -r.tr_psi_phi}, {-r.tr_psi_phi, r.tr_psi2}};
  r.det_b = determinant(r.b);
  r.independent = rank(Matrix::from_rows({flatten(psi), flatten(phi)}, l * l)) == 2;

  const Scalar inv = Scalar::rational(1, static_cast<long>(l + 2));
  Matrix id = Matrix::identity(l);
  std::vector<Vector> rows;
  for (const Matrix& eq : {Matrix(psi * psi - id * (inv * r.tr_psi2)), Matrix(phi * phi - id * (inv * r.tr_phi2)),
                           Matrix(psi * phi - id * (inv * r.tr_psi_phi))})
    for (std::size_t i = 0; i < l; ++i) rows.push_back(eq.row(i));
  r.joint_eigenvectors = Subspace::span(l, nullspace(Matrix::from_rows(rows, l)));

  if (r.tr_psi_phi.is_zero() && r.tr_phi2.is_zero())
    r.outcome = OscExtensionOutcome::FirstAlternative;
  else if (r.det_b.is_zero())
    r.outcome = OscExtensionOutcome::DegenerateTraceForm;
  else
    r.outcome = OscExtensionOutcome::NotConformallyEinstein;
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Einstein: return "einstein";
    case Verdict::ConformallyEinsteinByTheorem: return "conformally_einstein_by_theorem";
    case Verdict::ObstructionsPassUndecided: return "obstructions_pass_undecided";
    case Verdict::NotConformallyEinsteinByTheorem: return "not_conformally_einstein_by_theorem";
    case Verdict::FailsObstructions: return "fails_obstructions";
  }
  return "unknown";
}

VerdictResult decide_verdict(const MetricLieAlgebra& m, const ObstructionReport& o,
                             const std::optional<RExtension>& line_extension) {
  VerdictResult r;
  const Provenance& p = m.provenance();
  if (o.einstein) {
    r.verdict = Verdict::Einstein;
    r.citations.push_back("einstein:ricci-proportional-to-metric");
    return r;
  }
  if (o.weyl_zero) {
    r.verdict = Verdict::ConformallyEinsteinByTheorem;
    r.citations.push_back("conformally-flat:weyl-and-cotton-vanish");
    return r;
  }
  if (o.pass) {
    r.citations.push_back("obstruction:bach-flat-and-weyl-nullity");
  } else {
    r.citations.push_back(o.bach_flat ? "obstruction:weyl-nullity-ideal-zero" : "obstruction:bach-not-zero");
  }
  if (p.family == "osc") {
    require(o.pass, "oscillator algebra fails the conformal obstructions");
    r.verdict = Verdict::ConformallyEinsteinByTheorem;
    r.citations.push_back("theorem:oscillator-algebras-conformally-einstein");
    return r;
  }

  // Results proving non-existence apply whether or not the generic obstructions
  // already failed; they are cited next to the obstruction outcome.
  bool theorem_negative = false;
  if (p.family == "sl2C_real" || p.family == "sl3C_real") {
    // Conformally Einstein exactly when mu = 0, or lambda = 0 for sl2(C); both were caught above.
    theorem_negative = true;
    r.citations.push_back("theorem:complex-simple-as-real-metric-algebra");
  }
  if (p.family == "g_psi_phi") {
    auto check = osc_extension_check(p.matrix("Psi"), p.matrix("Phi"), static_cast<std::size_t>(p.integer("t")),
                                     static_cast<std::size_t>(p.integer("s")));
    r.citations.push_back("oscillator-extension:" + to_string(check.outcome));
    if (check.outcome == OscExtensionOutcome::NotConformallyEinstein) {
      theorem_negative = true;
      r.citations.push_back("theorem:oscillator-extension-trace-form");
    }
  }
  if (line_extension) {
    auto obs = r_extension_obstruction(*line_extension);
    r.citations.push_back("line-extension-system:" + to_string(obs.status));
    if (obs.fails()) {
      theorem_negative = true;
      r.citations.push_back("theorem:line-extension-system-has-no-solution");
    }
  }
  if (theorem_negative)
    r.verdict = Verdict::NotConformallyEinsteinByTheorem;
  else
    r.verdict = o.pass ? Verdict::ObstructionsPassUndecided : Verdict::FailsObstructions;
  return r;
}

}  // namespace metla
