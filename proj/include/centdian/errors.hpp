#pragma once

#include <stdexcept>
#include <string>

namespace centdian {

// Base for everything this library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad input: rejected instance, malformed model, out-of-range parameter.
// The CLI maps these to exit code 2.
struct ValidationError : Error {
  using Error::Error;
};

// Resource or numeric limits hit while solving. CLI exit code 3.
struct SolverLimitError : Error {
  using Error::Error;
};

struct DisconnectedGraph : ValidationError {
  using ValidationError::ValidationError;
};

struct EmptySet : ValidationError {
  using ValidationError::ValidationError;
};

struct MalformedModel : ValidationError {
  using ValidationError::ValidationError;
};

struct ParseError : ValidationError {
  using ValidationError::ValidationError;
};

struct NegativeWeight : ValidationError {
  using ValidationError::ValidationError;
};

struct InvalidParams : ValidationError {
  using ValidationError::ValidationError;
};

struct InvalidKappa : ValidationError {
  using ValidationError::ValidationError;
};

struct InvalidFractional : ValidationError {
  using ValidationError::ValidationError;
};

struct UncoverableElement : ValidationError {
  using ValidationError::ValidationError;
};

struct InstanceTooLarge : SolverLimitError {
  using SolverLimitError::SolverLimitError;
};

struct NumericalFailure : SolverLimitError {
  using SolverLimitError::SolverLimitError;
};

}  // namespace centdian
