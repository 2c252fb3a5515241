#include "metla/double_extension.hpp"

#include "metla/errors.hpp"

namespace metla {

namespace {

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

std::optional<std::string> derivation_witness(const LieAlgebra& l, const Matrix& d) {
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector lhs = d * l.bracket(unit(n, i), unit(n, j));
      Vector rhs = l.bracket(d.column(i), unit(n, j)) + l.bracket(unit(n, i), d.column(j));
      if (lhs != rhs) return "(" + l.labels()[i] + "," + l.labels()[j] + ")";
    }
  return std::nullopt;
}

}  // namespace

DoubleExtension double_extend(DoubleExtensionSpec spec) {
  const auto& h = spec.h;
  const auto& s = spec.s;
  const std::size_t p = s.dim(), m = h.dim(), n = 2 * p + m;

  if (auto problems = h.algebra().validate(); !problems.empty()) throw InvalidInput("h: " + problems.front());
  if (auto problems = s.validate(); !problems.empty()) throw InvalidInput("s: " + problems.front());
  if (spec.delta.size() != p) throw InvalidInput("need one derivation per basis element of s");
  if (spec.b.rows() != p || spec.b.cols() != p) throw InvalidInput("b must be a dim(s) x dim(s) matrix");
  if (!spec.b.is_symmetric()) throw InvalidInput("b is not symmetric");
  for (std::size_t i = 0; i < p; ++i) {
    const Matrix& d = spec.delta[i];
    const std::string name = "delta(" + s.labels()[i] + ")";
    if (d.rows() != m || d.cols() != m) throw InvalidInput(name + " has the wrong size");
    Matrix skew = h.metric() * d;
    if (skew + skew.transpose() != Matrix(m, m)) throw InvalidInput(name + " is not skew for the metric of h");
    if (auto w = derivation_witness(h.algebra(), d)) throw InvalidInput(name + " is not a derivation at " + *w);
  }
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) {
      Matrix lhs(m, m);
      for (const auto& [k, v] : s.bracket_terms(i, j)) lhs += spec.delta[k] * v;
      if (lhs != commutator(spec.delta[i], spec.delta[j]))
        throw InvalidInput("delta is not a homomorphism at (" + s.labels()[i] + "," + s.labels()[j] + ")");
    }
  if (auto w = invariance_witness(s, spec.b)) throw InvalidInput("b is not ad-invariant at " + *w);

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < p; ++i)
    labels.push_back(i < spec.dual_labels.size() ? spec.dual_labels[i] : s.labels()[i] + "*");
  for (const auto& l : h.algebra().labels()) labels.push_back(l);
  for (const auto& l : s.labels()) labels.push_back(l);

  std::vector<Scalar> c(n * n * n);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    c[(i * n + j) * n + k] += v;
    c[(j * n + i) * n + k] -= v;
  };
  const std::size_t ho = p, so = p + m;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j)
      for (const auto& [k, v] : s.bracket_terms(i, j)) set(so + i, so + j, so + k, v);
  // [S_i, sigma^j] = -sigma^j o ad_{S_i} = -sum_k c_{ik}^j sigma^k
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k < p; ++k)
      for (const auto& [j, v] : s.bracket_terms(i, k)) set(so + i, j, k, -v);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t bb = 0; bb < m; ++bb)
        if (!spec.delta[i](bb, a).is_zero()) set(so + i, ho + a, ho + bb, spec.delta[i](bb, a));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t bb = a + 1; bb < m; ++bb) {
      for (const auto& [k, v] : h.algebra().bracket_terms(a, bb)) set(ho + a, ho + bb, ho + k, v);
      for (std::size_t i = 0; i < p; ++i) {
        Scalar v = dot(spec.delta[i].column(a), h.metric().column(bb));
        if (!v.is_zero()) set(ho + a, ho + bb, i, v);
      }
    }

  Matrix g(n, n);
  for (std::size_t i = 0; i < p; ++i) {
    g(i, so + i) = 1;
    g(so + i, i) = 1;
    for (std::size_t j = 0; j < p; ++j) g(so + i, so + j) = spec.b(i, j);
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t bb = 0; bb < m; ++bb) g(ho + a, ho + bb) = h.metric()(a, bb);

  LieAlgebra algebra(std::move(labels), std::move(c));
  if (auto problems = algebra.validate(); !problems.empty())
    throw InvariantViolation("double extension of valid data failed validation: " + problems.front());
  std::optional<MetricLieAlgebra> result;
  try {
    result.emplace(std::move(algebra), std::move(g));
  } catch (const InvalidInput& e) {
    throw InvariantViolation(std::string("double extension metric check failed: ") + e.what());
  }

  DoubleExtension out{std::move(spec), std::move(*result), {}};
  Subspace inner = out.spec.h.algebra().inner_derivations();
  bool all_inner = true;
  for (const auto& d : out.spec.delta) all_inner = all_inner && inner.contains(flatten(d));
  if (all_inner && p > 0)
    out.notes.push_back("delta(s) consists of inner derivations of h; the extension may be decomposable");
  return out;
}

std::vector<std::string> double_extension_ricci_violations(const DoubleExtension& e, const Matrix& ric) {
  std::vector<std::string> out;
  const std::size_t p = e.dim_s(), m = e.dim_h();
  const auto& h = e.spec.h.algebra();
  const Scalar q = Scalar::rational(-1, 4);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < e.g.dim(); ++j)
      if (!ric(e.dual_index(i), j).is_zero()) out.push_back("Ricci row of s* is not zero");
  Matrix kh = h.killing_form();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (ric(e.h_index(a), e.h_index(b)) != q * kh(a, b)) out.push_back("Ricci h block differs from -1/4 K_h");
  Matrix ks = e.spec.s.killing_form();
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      Scalar expect = q * (Scalar(2) * ks(i, j) + (e.spec.delta[i] * e.spec.delta[j]).trace());
      if (ric(e.s_index(i), e.s_index(j)) != expect) out.push_back("Ricci s block differs");
    }
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      Scalar eta = (e.spec.delta[i] * h.ad_basis(a)).trace();
      if (ric(e.s_index(i), e.h_index(a)) != q * eta) out.push_back("Ricci mixed block differs from -1/4 eta");
    }
  return out;
}

NormalizedExtension normalize_abelian_b(const DoubleExtensionSpec& spec) {
  if (!spec.s.is_abelian()) throw InvalidInput("normalization of b requires abelian s");
  DoubleExtensionSpec zero = spec;
  zero.b = Matrix(spec.s.dim(), spec.s.dim());
  DoubleExtension original = double_extend(spec);
  DoubleExtension normalized = double_extend(std::move(zero));
  const std::size_t n = normalized.g.dim(), p = spec.s.dim();
  Matrix f = Matrix::identity(n);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k < p; ++k) f(normalized.dual_index(k), normalized.s_index(i)) = Scalar::rational(-1, 2) * spec.b(i, k);

  // Isometry and homomorphism, checked rather than assumed.
  if (f.transpose() * original.g.metric() * f != normalized.g.metric())
    throw InvariantViolation("normalizing map is not an isometry");
  const auto& src = normalized.g.algebra();
  const auto& dst = original.g.algebra();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (f * src.bracket(unit(n, i), unit(n, j)) != dst.bracket(f.column(i), f.column(j)))
        throw InvariantViolation("normalizing map is not a homomorphism");
  return {std::move(normalized), std::move(f)};
}

RExtension r_extension(const MetricLieAlgebra& h, const Matrix& delta, const std::string& minus_label,
                       const std::string& plus_label) {
  DoubleExtensionSpec spec{h, LieAlgebra({plus_label}, {Scalar(0)}), Matrix(1, 1), {delta}, {minus_label}};
  DoubleExtension e = double_extend(std::move(spec));
  const std::size_t m = h.dim();
  Vector eta(m);
  for (std::size_t a = 0; a < m; ++a) eta[a] = (delta * h.algebra().ad_basis(a)).trace();
  return {std::move(e.g), h, delta, std::move(eta)};
}

Matrix pseudo_euclidean(std::size_t t, std::size_t s) {
  Vector d(t + s, Scalar(1));
  for (std::size_t i = 0; i < t; ++i) d[i] = -1;
  return Matrix::diagonal(d);
}

bool in_so(const Matrix& phi, std::size_t t) {
  if (!phi.is_square() || t > phi.rows()) return false;
  Matrix a = pseudo_euclidean(t, phi.rows() - t) * phi;
  return a + a.transpose() == Matrix(phi.rows(), phi.rows());
}

RExtension oscillator(std::size_t t, std::size_t s, const Matrix& phi) {
  const std::size_t l = t + s;
  if (phi.rows() != l || phi.cols() != l) throw InvalidInput("Phi must be (t+s) x (t+s)");
  if (!in_so(phi, t)) throw InvalidInput("Phi is not in so(t,s)");
  if (determinant(phi).is_zero()) throw InvalidInput("Phi is singular");
  LieAlgebra flat = LieAlgebra::abelian(l);
  MetricLieAlgebra h(flat, pseudo_euclidean(t, s));
  return r_extension(h, phi, "e0", "e" + std::to_string(l + 1));
}

RExtension g_psi_phi(const Matrix& psi, const Matrix& phi, std::size_t t, std::size_t s) {
  RExtension osc = oscillator(t, s, phi);
  const std::size_t l = t + s;
  if (psi.rows() != l || psi.cols() != l) throw InvalidInput("Psi must be (t+s) x (t+s)");
  if (!in_so(psi, t)) throw InvalidInput("Psi is not in so(t,s)");
  if (!commutator(phi, psi).is_zero()) throw InvalidInput("Phi and Psi do not commute");
  Matrix delta = block_diagonal({Matrix(1, 1), psi, Matrix(1, 1)});
  return r_extension(osc.g, delta);
}

RExtension osc_plus_line(const Matrix& phi, const Matrix& psi, bool c_normalized) {
  const std::size_t l = phi.rows();
  if (!phi.is_square() || psi.rows() != l || psi.cols() != l) throw InvalidInput("Phi and Psi must be square of equal size");
  if (phi.is_zero()) throw InvalidInput("Phi must be nonzero");
  if (!in_so(phi, 0) || !in_so(psi, 0)) throw InvalidInput("Phi and Psi must be skew-symmetric");
  if (!commutator(phi, psi).is_zero()) throw InvalidInput("Phi and Psi do not commute");

  // h: e0, e1..el, e(l+1), e(l+2)
  const std::size_t m = l + 3;
  std::vector<std::string> labels{"e0"};
  for (std::size_t i = 1; i <= l + 2; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vector>> brackets;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) {
      Vector v(m);
      v[0] = phi(j, i);  // <Phi e_i, e_j>
      if (!v[0].is_zero()) brackets.push_back({{1 + i, 1 + j}, v});
    }
  for (std::size_t j = 0; j < l; ++j) {
    Vector v(m);
    for (std::size_t k = 0; k < l; ++k) v[1 + k] = phi(k, j);
    if (!is_zero(v)) brackets.push_back({{l + 1, 1 + j}, v});
  }
  Matrix metric(m, m);
  metric(0, l + 1) = 1;
  metric(l + 1, 0) = 1;
  for (std::size_t i = 0; i < l; ++i) metric(1 + i, 1 + i) = 1;
  metric(l + 2, l + 2) = 1;
  MetricLieAlgebra h(LieAlgebra::from_brackets(labels, brackets), metric);

  Scalar c = c_normalized ? 1 : 0;
  Matrix delta(m, m);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) delta(1 + i, 1 + j) = psi(i, j);
  delta(l + 2, l + 1) = c;
  delta(0, l + 2) = -c;
  return r_extension(h, delta);
}

}  // namespace metla
