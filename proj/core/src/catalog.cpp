#include "metla/catalog.hpp"

#include "metla/errors.hpp"

namespace metla {

namespace {

using Params = std::map<std::string, ParamValue>;

LieAlgebra from_matrix_basis(std::vector<std::string> labels, const std::vector<Matrix>& basis) {
  const std::size_t n = basis.size(), d = basis.front().rows();
  Matrix coords(d * d, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector v = flatten(basis[i]);
    for (std::size_t r = 0; r < d * d; ++r) coords(r, i) = v[r];
  }
  std::vector<Scalar> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto x = solve_linear(coords, flatten(commutator(basis[i], basis[j])));
      if (!x) throw InvariantViolation("matrix basis is not closed under the commutator");
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = (*x)[k];
    }
  return LieAlgebra(std::move(labels), std::move(c));
}

Matrix elementary(std::size_t d, std::size_t i, std::size_t j) {
  Matrix m(d, d);
  m(i, j) = 1;
  return m;
}

std::int64_t int_param(const Params& p, const std::string& k) { return std::get<std::int64_t>(p.at(k)); }
const Scalar& scalar_param(const Params& p, const std::string& k) { return std::get<Scalar>(p.at(k)); }
const Matrix& matrix_param(const Params& p, const std::string& k) { return std::get<Matrix>(p.at(k)); }

std::size_t count_param(const Params& p, const std::string& k) {
  auto v = int_param(p, k);
  if (v < 0 || v > 64) throw InvalidInput("parameter " + k + " must be in [0, 64]");
  return static_cast<std::size_t>(v);
}

MetricLieAlgebra scaled_killing(LieAlgebra l, const Scalar& scale) {
  Matrix k = l.killing_form() * scale;
  return MetricLieAlgebra(std::move(l), std::move(k));
}

Matrix direct_sum_constants_metric(const MetricLieAlgebra& a, const MetricLieAlgebra& b, LieAlgebra* out) {
  const std::size_t p = a.dim(), q = b.dim(), n = p + q;
  std::vector<Scalar> c(n * n * n);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      for (const auto& [k, v] : a.algebra().bracket_terms(i, j)) c[(i * n + j) * n + k] = v;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      for (const auto& [k, v] : b.algebra().bracket_terms(i, j)) c[((p + i) * n + p + j) * n + p + k] = v;
  std::vector<std::string> labels = a.algebra().labels();
  for (const auto& l : b.algebra().labels()) labels.push_back(l);
  *out = LieAlgebra(std::move(labels), std::move(c));
  return block_diagonal({a.metric(), b.metric()});
}

AlgebraInstance build_abelian(const Params& p) {
  std::size_t t = count_param(p, "t"), s = count_param(p, "s");
  if (t + s == 0) throw InvalidInput("abelian algebra needs t + s > 0");
  return {MetricLieAlgebra(LieAlgebra::abelian(t + s), pseudo_euclidean(t, s)), std::nullopt};
}

AlgebraInstance build_sl2r(const Params& p) {
  const Scalar& c = scalar_param(p, "scale");
  if (c.is_zero()) throw InvalidInput("scale must be nonzero");
  return {scaled_killing(sl2_split(), c), std::nullopt};
}

AlgebraInstance build_so3(const Params& p) {
  const Scalar& c = scalar_param(p, "scale");
  if (c.is_zero()) throw InvalidInput("scale must be nonzero");
  return {scaled_killing(so3_standard(), c), std::nullopt};
}

AlgebraInstance build_complex(const LieAlgebra& h, const Params& p) {
  const Scalar& lambda = scalar_param(p, "lambda");
  const Scalar& mu = scalar_param(p, "mu");
  if (lambda.is_zero() && mu.is_zero()) throw InvalidInput("lambda and mu must not both vanish");
  return {MetricLieAlgebra(complex_realification(h), complex_killing_metric(h, lambda, mu)), std::nullopt};
}

AlgebraInstance build_osc(const Params& p) {
  RExtension e = oscillator(count_param(p, "t"), count_param(p, "s"), matrix_param(p, "Phi"));
  MetricLieAlgebra g = e.g;
  return {std::move(g), std::move(e)};
}

// so(3) with [S_i, S_j] = k S_k acting on Euclidean R^3 through k times the
// defining representation, k = sqrt(6)/2; b = 0.
AlgebraInstance build_so3ex(const Params&) {
  const Scalar kappa = Scalar::surd(0, mpq_class(1, 2), 6);
  LieAlgebra so3 = so3_standard();
  std::vector<Scalar> c = so3.constants();
  for (auto& x : c) x *= kappa;
  LieAlgebra s({"S1", "S2", "S3"}, c);
  std::vector<Matrix> delta;
  for (std::size_t i = 0; i < 3; ++i) delta.push_back(so3.ad_basis(i) * kappa);
  LieAlgebra flat({"E1", "E2", "E3"}, std::vector<Scalar>(27));
  DoubleExtensionSpec spec{MetricLieAlgebra(flat, Matrix::identity(3)), s, Matrix(3, 3), delta,
                           {"sigma1", "sigma2", "sigma3"}};
  DoubleExtension e = double_extend(std::move(spec));
  return {std::move(e.g), std::nullopt};
}

AlgebraInstance build_g_psi_phi(const Params& p) {
  RExtension e = g_psi_phi(matrix_param(p, "Psi"), matrix_param(p, "Phi"), count_param(p, "t"), count_param(p, "s"));
  MetricLieAlgebra g = e.g;
  return {std::move(g), std::move(e)};
}

AlgebraInstance build_osc_plus_line(const Params& p) {
  auto c = int_param(p, "c_normalized");
  if (c != 0 && c != 1) throw InvalidInput("c_normalized must be 0 or 1");
  RExtension e = osc_plus_line(matrix_param(p, "Phi"), matrix_param(p, "Psi"), c == 1);
  MetricLieAlgebra g = e.g;
  return {std::move(g), std::move(e)};
}

AlgebraInstance build_so3_plus_line(const Params&) {
  MetricLieAlgebra so3 = scaled_killing(so3_standard(), Scalar(-1));
  MetricLieAlgebra line(LieAlgebra({"T"}, {Scalar(0)}), Matrix::identity(1));
  LieAlgebra sum;
  Matrix g = direct_sum_constants_metric(so3, line, &sum);
  return {MetricLieAlgebra(std::move(sum), std::move(g)), std::nullopt};
}

AlgebraInstance build_so3_plus_sl2r(const Params&) {
  MetricLieAlgebra so3 = scaled_killing(so3_standard(), Scalar(-1));
  MetricLieAlgebra sl2 = scaled_killing(sl2_split(), Scalar(1));
  LieAlgebra sum;
  Matrix g = direct_sum_constants_metric(so3, sl2, &sum);
  return {MetricLieAlgebra(std::move(sum), std::move(g)), std::nullopt};
}

Matrix two_rotations(long a, long b) { return block_diagonal({rotation(Scalar(a)), rotation(Scalar(b))}); }

using Builder = AlgebraInstance (*)(const Params&);

struct Registered {
  CatalogEntry entry;
  Builder build;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> r = [] {
    const ParamValue one = Scalar(1);
    std::vector<Registered> v;
    v.push_back({{"abelian",
                  "abelian algebra R^{t,s} with metric diag(-1 x t, 1 x s)",
                  {{"t", ParamKind::Integer, std::int64_t{1}, "negative directions"},
                   {"s", ParamKind::Integer, std::int64_t{3}, "positive directions"}},
                  {{1, 3, 0}, true, true, true, 4, Verdict::Einstein}},
                 build_abelian});
    v.push_back({{"sl2R_killing",
                  "sl(2,R) in the basis H, E, F with scale times its Killing form",
                  {{"scale", ParamKind::Scalar, one, "nonzero multiple of the Killing form"}},
                  {{1, 2, 0}, false, true, true, 3, Verdict::Einstein}},
                 build_sl2r});
    v.push_back({{"so3_killing",
                  "so(3) with scale times its Killing form (negative definite for scale > 0)",
                  {{"scale", ParamKind::Scalar, one, "nonzero multiple of the Killing form"}},
                  {{3, 0, 0}, false, true, true, 3, Verdict::Einstein}},
                 build_so3});
    v.push_back({{"sl2C_real",
                  "sl(2,C) as a real Lie algebra with lambda K_R + mu K_I",
                  {{"lambda", ParamKind::Scalar, one, "coefficient of K_R"},
                   {"mu", ParamKind::Scalar, one, "coefficient of K_I"}},
                  {{3, 3, 0}, false, false, false, 0, Verdict::NotConformallyEinsteinByTheorem}},
                 [](const Params& p) { return build_complex(sl2_split(), p); }});
    v.push_back({{"sl3C_real",
                  "sl(3,C) as a real Lie algebra with lambda K_R + mu K_I",
                  {{"lambda", ParamKind::Scalar, Scalar(0), "coefficient of K_R"},
                   {"mu", ParamKind::Scalar, one, "coefficient of K_I"}},
                  {{8, 8, 0}, false, false, true, 0, Verdict::NotConformallyEinsteinByTheorem}},
                 [](const Params& p) { return build_complex(sl3_split(), p); }});
    v.push_back({{"osc",
                  "oscillator algebra osc_Phi(t,s), Phi invertible in so(t,s)",
                  {{"t", ParamKind::Integer, std::int64_t{0}, "negative directions of R^{t,s}"},
                   {"s", ParamKind::Integer, std::int64_t{2}, "positive directions of R^{t,s}"},
                   {"Phi", ParamKind::Matrix, rotation(Scalar(1)), "invertible element of so(t,s)"}},
                  {{1, 3, 0}, true, false, true, 4, Verdict::ConformallyEinsteinByTheorem}},
                 build_osc});
    v.push_back({{"so3ex",
                  "double extension of Euclidean R^3 by so(3) acting by sqrt(6)/2 times the defining "
                  "representation, with the so(3) bracket rescaled by sqrt(6)/2",
                  {},
                  {{3, 6, 0}, false, false, true, 0, Verdict::FailsObstructions}},
                 build_so3ex});
    v.push_back({{"g_psi_phi",
                  "double extension of osc_Phi(t,s) by the derivation (Psi, 0)",
                  {{"t", ParamKind::Integer, std::int64_t{0}, "negative directions of R^{t,s}"},
                   {"s", ParamKind::Integer, std::int64_t{4}, "positive directions of R^{t,s}"},
                   {"Phi", ParamKind::Matrix, two_rotations(1, 2), "invertible element of so(t,s)"},
                   {"Psi", ParamKind::Matrix, two_rotations(1, 3), "element of so(t,s) commuting with Phi"}},
                  {{2, 6, 0}, true, false, true, 0, Verdict::NotConformallyEinsteinByTheorem}},
                 build_g_psi_phi});
    v.push_back({{"osc_plus_line",
                  "double extension of osc_Phi(l) + R by the derivation mixing the line with the oscillator",
                  {{"Phi", ParamKind::Matrix, two_rotations(1, 2), "nonzero element of so(l)"},
                   {"Psi", ParamKind::Matrix, two_rotations(1, 3), "element of so(l) commuting with Phi"},
                   {"c_normalized", ParamKind::Integer, std::int64_t{1}, "1 for the normalized derivation, 0 for c = 0"}},
                  {{2, 7, 0}, true, false, true, 0, Verdict::NotConformallyEinsteinByTheorem}},
                 build_osc_plus_line});
    v.push_back({{"so3_plus_line", "so(3) with minus its Killing form, plus a Euclidean line", {},
                  {{0, 4, 0}, false, false, true, 4, Verdict::ConformallyEinsteinByTheorem}},
                 build_so3_plus_line});
    v.push_back({{"so3_plus_sl2R", "so(3) with minus its Killing form plus sl(2,R) with its Killing form", {},
                  {{1, 5, 0}, false, false, true, 6, Verdict::ConformallyEinsteinByTheorem}},
                 build_so3_plus_sl2r});
    return v;
  }();
  return r;
}

const Registered& find(const std::string& key) {
  for (const auto& r : registry())
    if (r.entry.key == key) return r;
  throw InvalidInput("unknown catalog key '" + key + "'");
}

ParamKind kind_of(const ParamValue& v) {
  if (std::holds_alternative<std::int64_t>(v)) return ParamKind::Integer;
  if (std::holds_alternative<Scalar>(v)) return ParamKind::Scalar;
  return ParamKind::Matrix;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& r : registry()) out.push_back(r.entry);
    return out;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& key) { return find(key).entry; }

AlgebraInstance catalog_build(const std::string& key, const std::map<std::string, ParamValue>& params) {
  const Registered& r = find(key);
  Params merged;
  for (const auto& p : r.entry.params) merged[p.name] = p.default_value;
  for (const auto& [name, value] : params) {
    auto it = merged.find(name);
    if (it == merged.end()) throw InvalidInput("catalog entry '" + key + "' has no parameter '" + name + "'");
    if (kind_of(it->second) != kind_of(value)) throw InvalidInput("parameter '" + name + "' has the wrong kind");
    it->second = value;
  }
  AlgebraInstance inst = r.build(merged);
  inst.algebra.set_provenance({key, merged});
  if (inst.line_extension) inst.line_extension->g.set_provenance({key, merged});
  return inst;
}

LieAlgebra sl2_split() {
  return from_matrix_basis({"H", "E", "F"},
                           {Matrix{{1, 0}, {0, -1}}, Matrix{{0, 1}, {0, 0}}, Matrix{{0, 0}, {1, 0}}});
}

LieAlgebra sl3_split() {
  Matrix h1 = elementary(3, 0, 0) - elementary(3, 1, 1);
  Matrix h2 = elementary(3, 1, 1) - elementary(3, 2, 2);
  return from_matrix_basis({"H1", "H2", "E12", "E13", "E23", "E21", "E31", "E32"},
                           {h1, h2, elementary(3, 0, 1), elementary(3, 0, 2), elementary(3, 1, 2), elementary(3, 1, 0),
                            elementary(3, 2, 0), elementary(3, 2, 1)});
}

LieAlgebra so3_standard() {
  // [S1, S2] = S3 and cyclic.
  Matrix r1{{0, 0, 0}, {0, 0, -1}, {0, 1, 0}};
  Matrix r2{{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}};
  Matrix r3{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}};
  return from_matrix_basis({"S1", "S2", "S3"}, {r1, r2, r3});
}

LieAlgebra complex_realification(const LieAlgebra& h) {
  const std::size_t m = h.dim(), n = 2 * m;
  std::vector<Scalar> c(n * n * n);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& { return c[(i * n + j) * n + k]; };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (const auto& [k, v] : h.bracket_terms(a, b)) {
        at(a, b, k) = v;
        at(a, m + b, m + k) = v;
        at(m + a, b, m + k) = v;
        at(m + a, m + b, k) = -v;
      }
  std::vector<std::string> labels = h.labels();
  for (const auto& l : h.labels()) labels.push_back("i" + l);
  return LieAlgebra(std::move(labels), std::move(c));
}

Matrix complex_killing_metric(const LieAlgebra& h, const Scalar& lambda, const Scalar& mu) {
  const std::size_t m = h.dim();
  Matrix k = h.killing_form();
  Matrix g(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      g(i, j) = lambda * k(i, j);
      g(m + i, m + j) = -lambda * k(i, j);
      g(i, m + j) = mu * k(i, j);
      g(m + i, j) = mu * k(i, j);
    }
  return g;
}

Matrix rotation(const Scalar& a) { return Matrix{{0, -a}, {a, 0}}; }
Matrix boost(const Scalar& a) { return Matrix{{0, a}, {a, 0}}; }

}  // namespace metla
