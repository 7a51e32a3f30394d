#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Argument outside an operation's mathematical domain (branch cuts,
/// singular points, sign preconditions).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical engine could not reach its requested tolerance.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quantity that should be finite diverges for the given input.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed configuration, CSV, or other external input.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace casimir
