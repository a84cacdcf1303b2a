#pragma once

#include <stdexcept>
#include <string>

namespace mcc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data: bad coloring length, graph lacking required metadata.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Generator or solver parameter out of its admissible range.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Graph is not maximal outerplanar. The message names the first violated condition.
class RecognitionError : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold for the given data.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search ran out of its node budget before proving optimality.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace mcc
