#pragma once

#include <stdexcept>
#include <string>

namespace burch {

/// Base of every error raised by the library. The CLI maps subclasses onto
/// exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient rings, ranks disagree, or an index is
/// out of range.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Malformed or mathematically inadmissible user input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A size guard or degree/arity cap was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A verifier rejected something the construction guarantees; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace burch
