#pragma once

#include <stdexcept>
#include <string>

namespace quartica {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mathematical domain violation (e.g. square root of a negative value).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Caller-supplied parameters violate a stated precondition
// (coprimality, parity, positivity, malformed configuration).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// An object fails its own invariants (e.g. triangle inequality).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Parameters are admissible but produce a degenerate object.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

// An inverse operation cannot recover generators from its input.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

// Internal data is inconsistent with itself (corrupt input, impossible state).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// A transcribed proof step failed its runtime identity or parity check.
// Carries the step name so a failure localizes the broken step.
class ContractError : public Error {
 public:
  ContractError(std::string step, const std::string& message)
      : Error("contract error at step '" + step + "': " + message),
        step_(std::move(step)) {}

  const std::string& step() const noexcept { return step_; }

 private:
  std::string step_;
};

// A serialized record cannot be parsed; carries the offending field.
class FormatError : public Error {
 public:
  FormatError(std::string field, const std::string& message)
      : Error("certificate field '" + field + "': " + message),
        field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace quartica
