#pragma once

#include <stdexcept>
#include <string>

namespace sumprod {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed rational text or zero denominator.
struct ParseError : Error {
  using Error::Error;
};

/// A caller violated an operation's stated precondition.
struct PreconditionError : Error {
  using Error::Error;
};

/// A point handed to the group law does not satisfy the curve equation.
struct NotOnCurveError : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// A triple with repeated entries was passed where pairwise-distinct
/// entries are required.
struct RepeatedEntriesError : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// A family parameter hit one of its excluded values.  The message names
/// the degeneracy the value would cause (zero entry or coincident entries).
struct ExcludedParameterError : Error {
  using Error::Error;
};

/// A triple that is a valid solution but lies outside the parametric
/// family being inverted (the isolated constant solution).
struct NotInFamilyError : Error {
  using Error::Error;
};

/// A candidate triple fails the defining equations it was claimed to satisfy.
struct NotASolutionError : Error {
  using Error::Error;
};

/// One of the permutation inequalities required by a stream does not hold.
/// Carries the violating permutation rendered into the message.
struct ConditionViolationError : Error {
  ConditionViolationError(const std::string& msg, std::string permutation_text)
      : Error(msg), permutation(std::move(permutation_text)) {}

  std::string permutation;
};

}  // namespace sumprod
