#pragma once

#include <stdexcept>
#include <string>

namespace logzeta {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument at (or too close to) a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An effort cap (terms, refinement levels) was hit before the tolerance was met.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (flags, decimal strings, grid descriptions).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reading or writing a file failed; the message names the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace logzeta
