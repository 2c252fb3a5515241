#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "metla/conformal.hpp"

namespace metla {

enum class ParamKind { Integer, Scalar, Matrix };

struct CatalogParam {
  std::string name;
  ParamKind kind;
  ParamValue default_value;
  std::string description;
};

/// Known facts about the entry at its default parameters. The analysis
/// pipeline must reproduce every one of them.
struct ExpectedFacts {
  Signature signature;
  bool solvable = false;
  bool einstein = false;
  bool bach_flat = false;
  std::size_t nullity_dim = 0;
  Verdict verdict = Verdict::ObstructionsPassUndecided;
};

struct CatalogEntry {
  std::string key;
  std::string description;
  std::vector<CatalogParam> params;
  ExpectedFacts expected;
};

/// A built algebra plus the line-extension data when it is one.
struct AlgebraInstance {
  MetricLieAlgebra algebra;
  std::optional<RExtension> line_extension;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& key);

/// Builds the entry with defaults overridden by params. Unknown keys or
/// parameters, and parameters of the wrong kind, throw InvalidInput. The
/// provenance tag of the result lists every parameter value used.
AlgebraInstance catalog_build(const std::string& key, const std::map<std::string, ParamValue>& params = {});

/// Structure constants of sl(2) in the basis H, E, F and sl(3) in the basis
/// H1, H2, E12, E13, E23, E21, E31, E32.
LieAlgebra sl2_split();
LieAlgebra sl3_split();
LieAlgebra so3_standard();

/// Real Lie algebra underlying the complexification of a real form h:
/// basis X_a, iX_a with [iX, Y] = i[X, Y] and [iX, iY] = -[X, Y].
LieAlgebra complex_realification(const LieAlgebra& h);

/// lambda K_R + mu K_I, where K_R = [[K, 0], [0, -K]], K_I = [[0, K], [K, 0]] and K is the Killing form of h.
Matrix complex_killing_metric(const LieAlgebra& h, const Scalar& lambda, const Scalar& mu);

/// 2x2 rotation generator J = [[0, -1], [1, 0]] scaled by a.
Matrix rotation(const Scalar& a);
/// Symmetric 2x2 boost generator [[0, a], [a, 0]], an element of so(1,1).
Matrix boost(const Scalar& a);

}  // namespace metla
