#pragma once

#include <stdexcept>

namespace ecalg {

// Error taxonomy shared across the library. Everything is exact arithmetic;
// none of these signal numerical trouble, only contract violations.

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid value for an operation (zero inversion, foreign field element, ...).
struct DomainError : Error {
  using Error::Error;
};

/// Operation requires a different field kind (typically: finite field only).
struct UnsupportedField : Error {
  using Error::Error;
};

/// Enumeration or factorization exceeds the configured budget.
struct ResourceError : Error {
  using Error::Error;
};

/// Malformed textual or JSON input.
struct ParseError : Error {
  using Error::Error;
};

/// An internal cross-check that must hold by theory failed. Never expected;
/// any occurrence is a bug or a genuine mathematical contradiction.
struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace ecalg
