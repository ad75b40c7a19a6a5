#pragma once

#include <stdexcept>
#include <string>

namespace ramify {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates an operation's precondition (non-prime p, bad degree, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or table would exceed its configured budget.
class BudgetError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Not enough p-adic/series precision to certify a result, or an iteration stalled.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ramify
