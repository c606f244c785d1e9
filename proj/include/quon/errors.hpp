#pragma once

#include <stdexcept>
#include <string>

namespace quon {

/// Precondition or argument-shape violation (CLI exit code 1).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed text input: polynomials, matrices, data files (CLI exit code 2).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Request outside what the library models, e.g. a character table for n > 4.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A factorial enumeration larger than the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The composite exchange law failed as a polynomial identity. Never expected.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A species named in a derivation chain has no usable record.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace quon
