#pragma once

#include <stdexcept>
#include <string>

namespace daubloc {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data (e.g. an interval with a >= b).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds a hard size limit (index cap, interval count).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Iterative evaluation failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Operator norm could not be certified: the tail bound is not below the maximum found.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// Quotient with a denominator too small to be meaningful.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Caller broke a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace daubloc
