// errors.hpp -- exception types shared by the whole library.
#pragma once

#include <stdexcept>
#include <string>

namespace wadge {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (Q-files, term files, ordinals, stream literals).
struct ParseError : Error {
  using Error::Error;
};

// Ordinal notation that is syntactically readable but not in Cantor normal
// form (non-decreasing exponents, zero coefficient).
struct NotNormalForm : Error {
  using Error::Error;
};

struct UnknownElement : Error {
  using Error::Error;
};

struct UnknownBuiltin : Error {
  using Error::Error;
};

// A term that violates a structural invariant (sum inside sum, jump of a
// sum, cat label that is neither an atom nor a jump, ...).
struct InvariantViolation : Error {
  using Error::Error;
};

struct BadLength : Error {
  using Error::Error;
};

// mc_encode second stream starting with a pass.
struct BadHead : Error {
  using Error::Error;
};

// Stream selector out of range for the children/components it addresses.
struct InvalidSelector : Error {
  using Error::Error;
};

// Evaluation or reduction synthesis requested for a term whose labels do
// not all collapse to constants; such terms need the universal function
// machinery and are handled symbolically only.
struct JumpTermNotEvaluable : Error {
  using Error::Error;
};

struct NotReducible : Error {
  using Error::Error;
};

struct ResourceLimit : Error {
  using Error::Error;
};

// A broken internal invariant; seeing this is always a bug.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace wadge
