#include "metla/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "metla/errors.hpp"

namespace metla {

namespace {

using nlohmann::json;

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

json subspace_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& v : s.basis()) basis.push_back(vector_json(v));
  return {{"dim", s.dim()}, {"basis", std::move(basis)}};
}

json optional_scalar(const std::optional<Scalar>& x) { return x ? json(x->to_string()) : json(nullptr); }

std::string format_vector(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string approx(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Report analyze(const LoadedAlgebra& input, const std::string& input_bytes) {
  const MetricLieAlgebra& m = input.instance.algebra;
  const LieAlgebra& l = m.algebra();
  Report r;
  r.name = input.name;
  r.input_digest = fnv1a_hex(input_bytes);
  r.family = m.provenance().family;
  r.dim = m.dim();
  r.labels = l.labels();
  for (const auto& x : l.constants())
    if (!x.is_rational()) r.field = x.field();
  for (std::size_t i = 0; i < r.dim; ++i)
    for (std::size_t j = 0; j < r.dim; ++j)
      if (!m.metric()(i, j).is_rational()) r.field = m.metric()(i, j).field();

  if (auto problems = l.validate(); !problems.empty()) throw InvalidInput(problems);
  r.signature = m.signature();
  r.solvable = l.is_solvable();
  r.nilpotent = l.is_nilpotent();

  CurvatureBundle c = compute_curvature(m);
  r.rho = c.rho;
  r.einstein = is_einstein(m, c);
  r.ricci_squared_zero = c.ricci_squared.is_zero();
  if (c.bach) {
    r.weyl_zero = c.weyl->is_zero();
    r.bach = classify_bach(m, c);
    r.obstructions = necessary_conditions(m, c);
  } else {
    // Dimension <= 2: a bi-invariant metric there is flat.
    if (!r.einstein) throw InvariantViolation("non-Einstein bi-invariant metric in dimension <= 2");
    r.weyl_zero = true;
    r.bach.kind = BachKind::Einstein;
    r.obstructions.bach_flat = r.obstructions.einstein = r.obstructions.weyl_zero = r.obstructions.pass = true;
    r.obstructions.nullity = Subspace::whole(r.dim);
    r.obstructions.nullity_required = false;
  }
  if (input.instance.line_extension) r.line_extension = r_extension_obstruction(*input.instance.line_extension);
  if (r.family == "g_psi_phi") {
    const Provenance& p = m.provenance();
    r.osc_extension = osc_extension_check(p.matrix("Psi"), p.matrix("Phi"), static_cast<std::size_t>(p.integer("t")),
                                          static_cast<std::size_t>(p.integer("s")));
  }
  r.verdict = decide_verdict(m, r.obstructions, input.instance.line_extension);
  return r;
}

std::string report_json(const Report& r) {
  json doc;
  doc["format"] = "metla-report";
  doc["version"] = kReportVersion;
  doc["name"] = r.name;
  doc["input_digest"] = r.input_digest;
  doc["family"] = r.family.empty() ? json(nullptr) : json(r.family);
  doc["dim"] = r.dim;
  doc["d"] = r.field;
  doc["labels"] = r.labels;
  doc["validation"] = {{"antisymmetry", true},
                       {"jacobi", true},
                       {"metric_nondegenerate", true},
                       {"ad_invariant", true},
                       {"cross_checks", "passed"}};
  doc["signature"] = {{"negative", r.signature.p}, {"positive", r.signature.q}, {"zero", r.signature.z}};
  doc["solvable"] = r.solvable;
  doc["nilpotent"] = r.nilpotent;
  doc["curvature"] = {{"scalar_curvature", r.rho.to_string()},
                      {"einstein", r.einstein},
                      {"ricci_squared_zero", r.ricci_squared_zero},
                      {"weyl_zero", r.weyl_zero}};
  json bach = {{"flat", r.obstructions.bach_flat}, {"class", to_string(r.bach.kind)}};
  if (r.bach.two) {
    const auto& t = *r.bach.two;
    bach["two_eigenvalue"] = {{"lambda", optional_scalar(t.lambda)},
                              {"mu", optional_scalar(t.mu)},
                              {"lambda_approx", approx(t.lambda_approx)},
                              {"mu_approx", approx(t.mu_approx)},
                              {"complex_pair", t.complex_pair},
                              {"k", t.k},
                              {"b", t.b.to_string()},
                              {"c", t.c.to_string()}};
  }
  doc["bach"] = std::move(bach);
  doc["weyl_nullity_ideal"] = subspace_json(r.obstructions.nullity);
  doc["obstructions"] = {{"pass", r.obstructions.pass},
                         {"nullity_required", r.obstructions.nullity_required},
                         {"notes", r.obstructions.notes}};
  if (r.line_extension)
    doc["line_extension_system"] = {{"status", to_string(r.line_extension->status)},
                                    {"solutions", subspace_json(r.line_extension->solutions)}};
  if (r.osc_extension) {
    const auto& o = *r.osc_extension;
    doc["oscillator_extension"] = {{"tr_phi2", o.tr_phi2.to_string()},
                                   {"tr_psi2", o.tr_psi2.to_string()},
                                   {"tr_psi_phi", o.tr_psi_phi.to_string()},
                                   {"det_b", o.det_b.to_string()},
                                   {"independent", o.independent},
                                   {"joint_eigenvectors", subspace_json(o.joint_eigenvectors)},
                                   {"outcome", to_string(o.outcome)}};
  }
  doc["verdict"] = {{"value", to_string(r.verdict.verdict)}, {"citations", r.verdict.citations}};
  return doc.dump(2) + "\n";
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << "algebra: " << r.name << "\n";
  os << "input digest: " << r.input_digest << "\n";
  if (!r.family.empty()) os << "family: " << r.family << "\n";
  os << "dimension: " << r.dim << (r.field > 1 ? " over Q(sqrt " + std::to_string(r.field) + ")" : "") << "\n";
  os << "validation: antisymmetry, Jacobi, nondegeneracy, ad-invariance and curvature cross-checks passed\n";
  os << "signature: (" << r.signature.p << ", " << r.signature.q << ")\n";
  os << "solvable: " << yes_no(r.solvable) << ", nilpotent: " << yes_no(r.nilpotent) << "\n";
  os << "scalar curvature: " << r.rho.to_string() << "\n";
  os << "einstein: " << yes_no(r.einstein) << ", Ric^2 = 0: " << yes_no(r.ricci_squared_zero)
     << ", Weyl = 0: " << yes_no(r.weyl_zero) << "\n";
  os << "bach flat: " << yes_no(r.obstructions.bach_flat) << " (" << to_string(r.bach.kind) << ")\n";
  if (r.bach.two) {
    const auto& t = *r.bach.two;
    if (t.complex_pair)
      os << "  Ricci eigenvalues: +-" << approx(t.lambda_approx) << "i (x" << t.k << " each)\n";
    else
      os << "  Ricci eigenvalues: " << (t.lambda ? t.lambda->to_string() : approx(t.lambda_approx)) << " (x" << t.k
         << "), " << (t.mu ? t.mu->to_string() : approx(t.mu_approx)) << "\n";
  }
  os << "weyl nullity ideal: dimension " << r.obstructions.nullity.dim() << "\n";
  for (const auto& v : r.obstructions.nullity.basis()) os << "  " << format_vector(v) << "\n";
  os << "obstructions pass: " << yes_no(r.obstructions.pass) << "\n";
  for (const auto& n : r.obstructions.notes) os << "  note: " << n << "\n";
  if (r.line_extension)
    os << "line extension system: " << to_string(r.line_extension->status) << ", solution dimension "
       << r.line_extension->solutions.dim() << "\n";
  if (r.osc_extension)
    os << "oscillator extension: det B = " << r.osc_extension->det_b.to_string() << ", "
       << to_string(r.osc_extension->outcome) << "\n";
  os << "verdict: " << to_string(r.verdict.verdict) << " [";
  for (std::size_t i = 0; i < r.verdict.citations.size(); ++i) os << (i ? ", " : "") << r.verdict.citations[i];
  os << "]\n";
  return os.str();
}

}  // namespace metla
