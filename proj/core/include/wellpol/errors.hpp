#pragma once

#include <stdexcept>
#include <string>

namespace wellpol {

/// Input outside the mathematical domain of an operation (non-positive R,
/// gamma0 outside (0, pi/2), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure failed to deliver its contract. `what()` carries the
/// diagnostics (residuals, error estimates, matrix sizes).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid run or solver configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace wellpol
