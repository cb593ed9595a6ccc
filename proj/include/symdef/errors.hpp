#pragma once

#include <stdexcept>
#include <string>

namespace symdef {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in polynomial rings with different variable counts.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Exponent arithmetic left the representable range.
class ExponentOverflow : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (generator count, power bound, vertex budget) was hit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A theorem hypothesis or operation precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (graph files, family strings, ranges).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace symdef
