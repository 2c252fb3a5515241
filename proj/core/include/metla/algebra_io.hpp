#pragma once

#include <string>

#include "metla/catalog.hpp"

namespace metla {

/// An algebra read from a JSON document.
struct LoadedAlgebra {
  std::string name;
  AlgebraInstance instance;
};

/// Parses an algebra document. Structure constants are sparse
/// [i, j, k, "scalar"] entries (0-based) completed by antisymmetry, the metric
/// sparse [i, j, "scalar"] entries completed by symmetry. A "double_extension"
/// block may replace the raw constants and metric; a "family" block is rebuilt
/// from the catalog and must agree with the explicit data. Every problem found
/// is reported in one InvalidInput, each diagnostic naming its field.
LoadedAlgebra parse_algebra(const std::string& text);
LoadedAlgebra load_algebra_file(const std::string& path);

/// Canonical document: pretty-printed, keys sorted, upper-triangle entries
/// only. parse_algebra(emit_algebra(x)) re-emits identical bytes.
std::string emit_algebra(const std::string& name, const MetricLieAlgebra& m);

/// Canonical text of a parameter value as it appears in documents.
std::string param_to_string(const ParamValue& v);
/// Parses "name=value" overrides for a catalog entry. Matrices are written
/// row by row as "a,b;c,d".
ParamValue parse_param(const CatalogParam& p, const std::string& text);

}  // namespace metla
