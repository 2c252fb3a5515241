#include "metla/algebra_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

#include "metla/errors.hpp"

namespace metla {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "metla-algebra";
constexpr int kVersion = 1;

class Diagnostics {
 public:
  void add(std::string where, const std::string& what) { items_.push_back(std::move(where) + ": " + what); }
  bool empty() const { return items_.empty(); }
  void throw_if_any() const {
    if (!items_.empty()) throw InvalidInput(items_);
  }

 private:
  std::vector<std::string> items_;
};

// Field of a document: the one d > 1 its scalars use, or 1.
struct FieldTracker {
  std::int64_t d = 1;
  void note(const Scalar& x) {
    if (!x.is_rational() && x.field() > d) d = x.field();
  }
};

std::optional<Scalar> read_scalar(const json& j, const std::string& where, std::int64_t field, Diagnostics& diag) {
  if (!j.is_string()) {
    diag.add(where, "scalar must be a string");
    return std::nullopt;
  }
  try {
    Scalar x = Scalar::parse(j.get<std::string>());
    if (!x.is_rational() && x.field() != field) {
      diag.add(where, "scalar '" + j.get<std::string>() + "' lies outside Q(sqrt " + std::to_string(field) + ")");
      return std::nullopt;
    }
    return x;
  } catch (const InvalidInput&) {
    diag.add(where, "malformed scalar '" + j.get<std::string>() + "'");
    return std::nullopt;
  }
}

std::optional<std::size_t> read_index(const json& j, std::size_t n, const std::string& where, Diagnostics& diag) {
  if (!j.is_number_integer()) {
    diag.add(where, "index must be an integer");
    return std::nullopt;
  }
  auto v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::size_t>(v) >= n) {
    diag.add(where, "index " + std::to_string(v) + " out of range for dimension " + std::to_string(n));
    return std::nullopt;
  }
  return static_cast<std::size_t>(v);
}

std::vector<std::string> read_labels(const json& doc, const std::string& where, std::size_t n, Diagnostics& diag) {
  std::vector<std::string> labels;
  if (!doc.contains("labels")) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
    return labels;
  }
  const json& l = doc["labels"];
  if (!l.is_array() || l.size() != n) {
    diag.add(where + ".labels", "expected an array of " + std::to_string(n) + " strings");
    return {};
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (!l[i].is_string()) {
      diag.add(where + ".labels[" + std::to_string(i) + "]", "label must be a string");
      return {};
    }
    labels.push_back(l[i].get<std::string>());
    if (!seen.insert(labels.back()).second)
      diag.add(where + ".labels[" + std::to_string(i) + "]", "duplicate label '" + labels.back() + "'");
  }
  return labels;
}

// Sparse structure constants with antisymmetric completion. Entries given in
// both orders must be negatives of each other.
std::optional<std::vector<Scalar>> read_brackets(const json& doc, const std::string& where, std::size_t n,
                                                  std::int64_t field, Diagnostics& diag) {
  std::vector<Scalar> c(n * n * n);
  if (!doc.contains("brackets")) return c;
  const json& b = doc["brackets"];
  if (!b.is_array()) {
    diag.add(where + ".brackets", "expected an array of [i, j, k, \"scalar\"] entries");
    return std::nullopt;
  }
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::pair<std::size_t, Scalar>> given;
  bool ok = true;
  for (std::size_t e = 0; e < b.size(); ++e) {
    const std::string at = where + ".brackets[" + std::to_string(e) + "]";
    const json& t = b[e];
    if (!t.is_array() || t.size() != 4) {
      diag.add(at, "expected [i, j, k, \"scalar\"]");
      ok = false;
      continue;
    }
    auto i = read_index(t[0], n, at, diag), j = read_index(t[1], n, at, diag), k = read_index(t[2], n, at, diag);
    auto v = read_scalar(t[3], at, field, diag);
    if (!i || !j || !k || !v) {
      ok = false;
      continue;
    }
    if (*i == *j) {
      if (!v->is_zero()) {
        diag.add(at, "[e_i, e_i] must vanish (antisymmetry)");
        ok = false;
      }
      continue;
    }
    auto [lo, hi] = std::minmax(*i, *j);
    Scalar oriented = *i < *j ? *v : -*v;
    auto key = std::make_tuple(lo, hi, *k);
    auto it = given.find(key);
    if (it != given.end()) {
      if (it->second.second != oriented) {
        diag.add(at, "conflicts with entry " + std::to_string(it->second.first) + " under antisymmetry c_ij^k = -c_ji^k");
        ok = false;
      }
      continue;
    }
    given.emplace(key, std::make_pair(e, oriented));
  }
  if (!ok) return std::nullopt;
  for (const auto& [key, val] : given) {
    auto [i, j, k] = key;
    c[(i * n + j) * n + k] = val.second;
    c[(j * n + i) * n + k] = -val.second;
  }
  return c;
}

// Sparse symmetric form; entries given in both orders must agree.
std::optional<Matrix> read_form(const json& doc, const std::string& key, const std::string& where, std::size_t n,
                                std::int64_t field, Diagnostics& diag) {
  Matrix g(n, n);
  if (!doc.contains(key)) return g;
  const json& m = doc[key];
  if (!m.is_array()) {
    diag.add(where + "." + key, "expected an array of [i, j, \"scalar\"] entries");
    return std::nullopt;
  }
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, Scalar>> given;
  bool ok = true;
  for (std::size_t e = 0; e < m.size(); ++e) {
    const std::string at = where + "." + key + "[" + std::to_string(e) + "]";
    const json& t = m[e];
    if (!t.is_array() || t.size() != 3) {
      diag.add(at, "expected [i, j, \"scalar\"]");
      ok = false;
      continue;
    }
    auto i = read_index(t[0], n, at, diag), j = read_index(t[1], n, at, diag);
    auto v = read_scalar(t[2], at, field, diag);
    if (!i || !j || !v) {
      ok = false;
      continue;
    }
    auto p = std::minmax(*i, *j);
    auto it = given.find(p);
    if (it != given.end()) {
      if (it->second.second != *v) {
        diag.add(at, "conflicts with entry " + std::to_string(it->second.first) + " under symmetry");
        ok = false;
      }
      continue;
    }
    given.emplace(p, std::make_pair(e, *v));
  }
  if (!ok) return std::nullopt;
  for (const auto& [p, val] : given) {
    g(p.first, p.second) = val.second;
    g(p.second, p.first) = val.second;
  }
  return g;
}

// Sparse general matrix [row, col, "scalar"], used for derivations.
std::optional<Matrix> read_sparse_matrix(const json& m, const std::string& where, std::size_t n, std::int64_t field,
                                         Diagnostics& diag) {
  if (!m.is_array()) {
    diag.add(where, "expected an array of [row, col, \"scalar\"] entries");
    return std::nullopt;
  }
  Matrix out(n, n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  bool ok = true;
  for (std::size_t e = 0; e < m.size(); ++e) {
    const std::string at = where + "[" + std::to_string(e) + "]";
    const json& t = m[e];
    if (!t.is_array() || t.size() != 3) {
      diag.add(at, "expected [row, col, \"scalar\"]");
      ok = false;
      continue;
    }
    auto i = read_index(t[0], n, at, diag), j = read_index(t[1], n, at, diag);
    auto v = read_scalar(t[2], at, field, diag);
    if (!i || !j || !v) {
      ok = false;
      continue;
    }
    if (!seen.insert({*i, *j}).second) {
      diag.add(at, "duplicate entry");
      ok = false;
      continue;
    }
    out(*i, *j) = *v;
  }
  if (!ok) return std::nullopt;
  return out;
}

std::optional<std::size_t> read_dim(const json& doc, const std::string& where, Diagnostics& diag) {
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    diag.add(where + ".dim", "missing or not an integer");
    return std::nullopt;
  }
  auto d = doc["dim"].get<std::int64_t>();
  if (d < 1 || d > 256) {
    diag.add(where + ".dim", "must be between 1 and 256");
    return std::nullopt;
  }
  return static_cast<std::size_t>(d);
}

// Reads a Lie algebra block {dim, labels, brackets}. Jacobi failures are
// reported with the block's location.
std::optional<LieAlgebra> read_lie(const json& doc, const std::string& where, std::int64_t field, Diagnostics& diag) {
  auto n = read_dim(doc, where, diag);
  if (!n) return std::nullopt;
  auto labels = read_labels(doc, where, *n, diag);
  auto c = read_brackets(doc, where, *n, field, diag);
  if (labels.empty() || !c) return std::nullopt;
  LieAlgebra l(std::move(labels), std::move(*c));
  bool ok = true;
  for (const auto& problem : l.validate()) {
    diag.add(where + ".brackets", problem);
    ok = false;
  }
  if (!ok) return std::nullopt;
  return l;
}

std::optional<MetricLieAlgebra> read_metric_lie(const json& doc, const std::string& where, std::int64_t field,
                                                Diagnostics& diag) {
  auto l = read_lie(doc, where, field, diag);
  if (!l) return std::nullopt;
  auto g = read_form(doc, "metric", where, l->dim(), field, diag);
  if (!g) return std::nullopt;
  try {
    return MetricLieAlgebra(std::move(*l), std::move(*g));
  } catch (const InvalidInput& e) {
    for (const auto& d : e.diagnostics()) diag.add(where + ".metric", d);
    return std::nullopt;
  }
}

std::optional<MetricLieAlgebra> read_double_extension(const json& block, std::int64_t field, Diagnostics& diag) {
  const std::string where = "double_extension";
  if (!block.is_object() || !block.contains("h") || !block.contains("s")) {
    diag.add(where, "expected an object with blocks h and s");
    return std::nullopt;
  }
  auto h = read_metric_lie(block["h"], where + ".h", field, diag);
  auto s = read_lie(block["s"], where + ".s", field, diag);
  if (!h || !s) return std::nullopt;
  auto b = read_form(block, "b", where, s->dim(), field, diag);
  std::vector<Matrix> delta;
  if (!block.contains("delta") || !block["delta"].is_array() || block["delta"].size() != s->dim()) {
    diag.add(where + ".delta", "expected one sparse matrix per basis vector of s");
    return std::nullopt;
  }
  for (std::size_t i = 0; i < s->dim(); ++i) {
    auto m = read_sparse_matrix(block["delta"][i], where + ".delta[" + std::to_string(i) + "]", h->dim(), field, diag);
    if (!m) return std::nullopt;
    delta.push_back(std::move(*m));
  }
  if (!b) return std::nullopt;
  std::vector<std::string> dual;
  if (block.contains("dual_labels")) {
    const json& d = block["dual_labels"];
    if (!d.is_array() || d.size() != s->dim()) {
      diag.add(where + ".dual_labels", "expected one label per basis vector of s");
      return std::nullopt;
    }
    for (const auto& x : d) {
      if (!x.is_string()) {
        diag.add(where + ".dual_labels", "labels must be strings");
        return std::nullopt;
      }
      dual.push_back(x.get<std::string>());
    }
  }
  try {
    DoubleExtension e = double_extend({std::move(*h), std::move(*s), std::move(*b), std::move(delta), std::move(dual)});
    return std::move(e.g);
  } catch (const InvalidInput& e) {
    for (const auto& d : e.diagnostics()) diag.add(where, d);
    return std::nullopt;
  }
}

std::optional<ParamValue> read_param(const CatalogParam& p, const json& v, const std::string& where,
                                     std::int64_t field, Diagnostics& diag) {
  switch (p.kind) {
    case ParamKind::Integer:
      if (!v.is_number_integer()) {
        diag.add(where, "expected an integer");
        return std::nullopt;
      }
      return ParamValue{v.get<std::int64_t>()};
    case ParamKind::Scalar: {
      auto x = read_scalar(v, where, field, diag);
      if (!x) return std::nullopt;
      return ParamValue{*x};
    }
    case ParamKind::Matrix: {
      if (!v.is_array() || v.empty() || !v[0].is_array()) {
        diag.add(where, "expected a nonempty array of rows");
        return std::nullopt;
      }
      Matrix m(v.size(), v[0].size());
      for (std::size_t r = 0; r < v.size(); ++r) {
        if (!v[r].is_array() || v[r].size() != m.cols()) {
          diag.add(where + "[" + std::to_string(r) + "]", "rows must have equal length");
          return std::nullopt;
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
          auto x = read_scalar(v[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]", field, diag);
          if (!x) return std::nullopt;
          m(r, c) = *x;
        }
      }
      return ParamValue{std::move(m)};
    }
  }
  return std::nullopt;
}

std::optional<AlgebraInstance> read_family(const json& f, std::int64_t field, Diagnostics& diag) {
  if (!f.is_object() || !f.contains("key") || !f["key"].is_string()) {
    diag.add("family", "expected an object with a string key");
    return std::nullopt;
  }
  const std::string key = f["key"].get<std::string>();
  const CatalogEntry* entry = nullptr;
  for (const auto& e : catalog_entries())
    if (e.key == key) entry = &e;
  if (!entry) {
    diag.add("family.key", "unknown catalog key '" + key + "'");
    return std::nullopt;
  }
  std::map<std::string, ParamValue> params;
  if (f.contains("params")) {
    if (!f["params"].is_object()) {
      diag.add("family.params", "expected an object");
      return std::nullopt;
    }
    for (const auto& [name, value] : f["params"].items()) {
      const CatalogParam* p = nullptr;
      for (const auto& q : entry->params)
        if (q.name == name) p = &q;
      if (!p) {
        diag.add("family.params." + name, "entry '" + key + "' has no such parameter");
        continue;
      }
      if (auto v = read_param(*p, value, "family.params." + name, field, diag)) params[name] = std::move(*v);
    }
  }
  if (!diag.empty()) return std::nullopt;
  try {
    return catalog_build(key, params);
  } catch (const InvalidInput& e) {
    for (const auto& d : e.diagnostics()) diag.add("family", d);
    return std::nullopt;
  }
}

json param_json(const ParamValue& v) {
  if (auto i = std::get_if<std::int64_t>(&v)) return *i;
  if (auto s = std::get_if<Scalar>(&v)) return s->to_string();
  const Matrix& m = std::get<Matrix>(v);
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

LoadedAlgebra parse_algebra(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput("json: " + std::string(e.what()));
  }
  Diagnostics diag;
  if (!doc.is_object()) throw InvalidInput("document: expected a JSON object");
  if (doc.contains("format") && doc["format"] != kFormat) diag.add("format", "expected \"metla-algebra\"");
  if (doc.contains("version") && doc["version"] != kVersion) diag.add("version", "unsupported version");
  if (!doc.contains("name") || !doc["name"].is_string()) diag.add("name", "missing or not a string");
  std::int64_t field = 1;
  if (doc.contains("d")) {
    if (!doc["d"].is_number_integer() || doc["d"].get<std::int64_t>() < 1 ||
        !is_square_free(doc["d"].get<std::int64_t>()))
      diag.add("d", "must be a square-free positive integer");
    else
      field = doc["d"].get<std::int64_t>();
  }
  diag.throw_if_any();

  const bool has_raw = doc.contains("brackets") || doc.contains("metric") || doc.contains("dim");
  const bool has_ext = doc.contains("double_extension");
  const bool has_family = doc.contains("family");
  if (has_raw && has_ext) throw InvalidInput("double_extension: cannot be combined with dim, brackets or metric");

  std::optional<MetricLieAlgebra> explicit_algebra;
  if (has_ext)
    explicit_algebra = read_double_extension(doc["double_extension"], field, diag);
  else if (has_raw || !has_family)
    explicit_algebra = read_metric_lie(doc, "document", field, diag);
  diag.throw_if_any();

  std::optional<AlgebraInstance> built;
  if (has_family) {
    built = read_family(doc["family"], field, diag);
    diag.throw_if_any();
    if (explicit_algebra) {
      const MetricLieAlgebra& a = built->algebra;
      if (a.algebra().labels() != explicit_algebra->algebra().labels())
        diag.add("family", "labels differ from the catalog entry");
      else if (a.algebra().constants() != explicit_algebra->algebra().constants())
        diag.add("family", "structure constants differ from the catalog entry");
      else if (a.metric() != explicit_algebra->metric())
        diag.add("family", "metric differs from the catalog entry");
      diag.throw_if_any();
    }
  }

  std::string name = doc["name"].get<std::string>();
  if (built) return {std::move(name), std::move(*built)};
  return {std::move(name), AlgebraInstance{std::move(*explicit_algebra), std::nullopt}};
}

LoadedAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_algebra(ss.str());
  } catch (const InvalidInput& e) {
    std::vector<std::string> d;
    for (const auto& x : e.diagnostics()) d.push_back(path + ": " + x);
    throw InvalidInput(d);
  }
}

std::string emit_algebra(const std::string& name, const MetricLieAlgebra& m) {
  const LieAlgebra& l = m.algebra();
  const std::size_t n = l.dim();
  FieldTracker field;
  json doc;
  doc["format"] = kFormat;
  doc["version"] = kVersion;
  doc["name"] = name;
  doc["dim"] = n;
  doc["labels"] = l.labels();
  json brackets = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (const auto& [k, v] : l.bracket_terms(i, j)) {
        field.note(v);
        brackets.push_back({i, j, k, v.to_string()});
      }
  doc["brackets"] = std::move(brackets);
  json metric = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (!m.metric()(i, j).is_zero()) {
        field.note(m.metric()(i, j));
        metric.push_back({i, j, m.metric()(i, j).to_string()});
      }
  doc["metric"] = std::move(metric);
  const Provenance& p = m.provenance();
  if (!p.empty()) {
    json params = json::object();
    for (const auto& [k, v] : p.params) {
      if (auto s = std::get_if<Scalar>(&v)) field.note(*s);
      params[k] = param_json(v);
    }
    doc["family"] = {{"key", p.family}, {"params", std::move(params)}};
  }
  doc["d"] = field.d;
  return doc.dump(2) + "\n";
}

std::string param_to_string(const ParamValue& v) {
  if (auto i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (auto s = std::get_if<Scalar>(&v)) return s->to_string();
  const Matrix& m = std::get<Matrix>(v);
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += ';';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      out += m(r, c).to_string();
    }
  }
  return out;
}

ParamValue parse_param(const CatalogParam& p, const std::string& text) {
  const std::string where = "parameter " + p.name;
  switch (p.kind) {
    case ParamKind::Integer: {
      std::int64_t v = 0;
      auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || end != text.data() + text.size()) throw InvalidInput(where + ": expected an integer");
      return v;
    }
    case ParamKind::Scalar:
      try {
        return Scalar::parse(text);
      } catch (const InvalidInput&) {
        throw InvalidInput(where + ": malformed scalar '" + text + "'");
      }
    case ParamKind::Matrix: {
      std::vector<std::vector<Scalar>> rows;
      std::stringstream rs(text);
      std::string row;
      while (std::getline(rs, row, ';')) {
        rows.emplace_back();
        std::stringstream cs(row);
        std::string cell;
        while (std::getline(cs, cell, ',')) {
          try {
            rows.back().push_back(Scalar::parse(cell));
          } catch (const InvalidInput&) {
            throw InvalidInput(where + ": malformed scalar '" + cell + "'");
          }
        }
        if (rows.back().size() != rows.front().size()) throw InvalidInput(where + ": rows must have equal length");
      }
      if (rows.empty() || rows.front().empty()) throw InvalidInput(where + ": empty matrix");
      Matrix m(rows.size(), rows.front().size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
      return m;
    }
  }
  throw ContractViolation("unknown parameter kind");
}

}  // namespace metla
