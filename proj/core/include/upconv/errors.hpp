#pragma once

#include <stdexcept>
#include <string>

namespace upconv {

// Argument outside its physical or numerical domain (wavelength outside the
// Sellmeier validity range, negative pump power, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Structurally invalid input: empty chain, non-monotone grid, unknown
// configuration key, insufficient fit samples.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Numerical failure: missing root, singular system, non-convergence.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

class FitError : public NumericError {
 public:
  explicit FitError(const std::string& msg) : NumericError(msg) {}
};

// Request exceeds a hard resource limit (e.g. too many Monte Carlo gates).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace upconv
