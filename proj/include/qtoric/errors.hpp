#pragma once

#include <stdexcept>
#include <string>

namespace qtoric {

// Base of every error raised by the library. The CLI maps each subclass to
// its own exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a structural invariant (bad polytope, invalid pair, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Matrix or vector dimensions do not agree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured search or enumeration bound would be exceeded.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, long long bound)
      : Error(what + " (bound " + std::to_string(bound) + ")"), bound_(bound) {}
  long long bound() const { return bound_; }

 private:
  long long bound_;
};

// Internal consistency check failed; indicates corrupted input data.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// The two inputs cannot be compared (different combinatorics, presentations).
class IncomparableError : public Error {
 public:
  using Error::Error;
};

// Malformed or unreadable input (bad JSON, missing fields).
class InputError : public Error {
 public:
  using Error::Error;
};

// Requested computation is not available for this kind of base.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace qtoric
