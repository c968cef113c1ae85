#pragma once

#include <stdexcept>
#include <string>

namespace ncosc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Configuration / CLI usage problems (exit code 1 at the CLI boundary).
struct ConfigError : Error {
  using Error::Error;
};

// Malformed config text (bad syntax, unparsable value); message carries the line number.
struct ParseError : ConfigError {
  using ConfigError::ConfigError;
};

// Config key that no setting matches.
struct UnknownKey : ConfigError {
  using ConfigError::ConfigError;
};

// Well-formed value outside its legal range (e.g. alpha outside (0,1]).
struct InvalidValue : ConfigError {
  using ConfigError::ConfigError;
};

// Basis (or padded basis) would exceed the configured state-count limit.
struct CapacityExceeded : Error {
  using Error::Error;
};

// Symbol substitution produced an inf/nan coefficient.
struct NonFiniteCoefficient : Error {
  using Error::Error;
};

// Requested state is not part of the basis at hand.
struct StateOutOfBasis : Error {
  using Error::Error;
};

// Matrix handed to the eigensolver fails the hermiticity tolerance.
struct NonHermitianInput : Error {
  using Error::Error;
};

struct ConvergenceFailure : Error {
  using Error::Error;
};

// Finite-difference slope requested for a state that is degenerate at the
// expansion point; the tracked eigenvalue is not well defined there.
struct DegenerateState : Error {
  using Error::Error;
};

// Eigenstate tracking across finite-difference steps fell below the
// overlap threshold.
struct TrackingLost : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace ncosc
