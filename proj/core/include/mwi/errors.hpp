#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mwi {

/// One violated constraint: which field, what was required, what was seen.
struct Violation {
  std::string field;
  std::string constraint;
  double value = 0.0;
};

std::string format_violations(const std::vector<Violation>& v);

/// Invalid configuration or unusable input. CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::string msg) : std::runtime_error(std::move(msg)) {}
  ConfigError(std::string msg, std::vector<Violation> violations)
      : std::runtime_error(std::move(msg)), violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// A quadrature or iteration failed to reach its tolerance.
/// Carries the error estimate actually achieved. CLI maps this to exit code 3.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(std::string msg, double achieved)
      : std::runtime_error(std::move(msg)), achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

} // namespace mwi
