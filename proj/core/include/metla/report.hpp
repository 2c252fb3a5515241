#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metla/algebra_io.hpp"

namespace metla {

inline constexpr int kReportVersion = 1;

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

struct Report {
  std::string name;
  std::string input_digest;
  std::string family;  ///< empty when the input carries no family tag
  std::size_t dim = 0;
  std::int64_t field = 1;
  std::vector<std::string> labels;
  Signature signature;
  bool solvable = false;
  bool nilpotent = false;
  Scalar rho;
  bool einstein = false;
  bool ricci_squared_zero = false;
  bool weyl_zero = false;
  BachClass bach;
  ObstructionReport obstructions;
  std::optional<RExtensionObstruction> line_extension;
  std::optional<OscExtensionCheck> osc_extension;
  VerdictResult verdict;
};

/// Runs every cross-check (InvariantViolation on disagreement) and the verdict
/// logic. input_bytes feeds the digest only.
Report analyze(const LoadedAlgebra& input, const std::string& input_bytes);

/// Deterministic renderings: identical reports give identical bytes.
std::string report_json(const Report& r);
std::string report_text(const Report& r);

}  // namespace metla
