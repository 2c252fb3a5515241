#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace metla {

/// Two scalars from different quadratic fields were combined.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller broke a documented precondition (shape mismatch, wrong dimension).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed or mathematically invalid input. Carries every diagnostic found.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(std::vector<std::string> diagnostics)
      : std::runtime_error(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}
  explicit InvalidInput(const std::string& message) : InvalidInput(std::vector<std::string>{message}) {}

  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
      if (!out.empty()) out += "; ";
      out += s;
    }
    return out;
  }
  std::vector<std::string> diagnostics_;
};

/// Two independent computations of the same quantity disagreed. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace metla
