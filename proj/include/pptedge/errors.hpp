#pragma once

#include <stdexcept>
#include <string>

namespace pptedge {

// Exit codes used by the command-line tool. Each exception type below maps
// to exactly one of them.
enum class ExitCode : int {
  Success = 0,
  Usage = 1,
  Parse = 2,
  InvalidState = 3,
  Inapplicable = 4,
  Numerical = 5,
};

// Caller broke a documented precondition (wrong shape, non-Hermitian input,
// zero vector, ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Matrix that was required to be positive semidefinite has an eigenvalue
// below the negative tolerance.
class NotPsdError : public std::domain_error {
 public:
  NotPsdError(const std::string& what, double min_eigenvalue)
      : std::domain_error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

// Input could not be read or decoded.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input decoded fine but is not a valid density matrix.
class InvalidStateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A construction was asked of a state that does not satisfy its
// precondition (no kernel, trace norm of the realignment <= 1, not PPT).
class InapplicableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Unknown catalog or family name.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An internal consistency check on a numerical result failed.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pptedge
