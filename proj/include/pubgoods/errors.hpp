#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pubgoods {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad construction arguments, malformed scenario files, schema violations.
// The CLI maps these to exit code 2.
class ValidationError : public Error {
public:
  using Error::Error;
};

// Missing or unreadable files. Exit code 2.
class IoError : public Error {
public:
  using Error::Error;
};

// An operation was handed a value outside its mathematical domain.
class DomainError : public Error {
public:
  using Error::Error;
};

// A quantity the operation divides by (or takes a ratio against) is zero.
class SingularityError : public Error {
public:
  using Error::Error;
};

// Query outside a tabulated range.
class RangeError : public Error {
public:
  using Error::Error;
};

// Iterative solve exceeded its iteration cap. Carries the last iterate so
// callers can inspect how far it got.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& what, std::vector<double> last)
      : Error(what), last_iterate(std::move(last)) {}
  std::vector<double> last_iterate;
};

// Requested constraints cannot all be met.
class InfeasibilityError : public Error {
public:
  using Error::Error;
};

// A pairwise majority tie makes the tournament undefined.
class TieError : public Error {
public:
  using Error::Error;
};

// Even electorate: the median is an interval, not a voter.
class AmbiguityError : public Error {
public:
  using Error::Error;
};

// A stated precondition does not hold (e.g. profile not single-peaked).
class PreconditionError : public Error {
public:
  using Error::Error;
};

// An exhaustive scan would exceed its evaluation budget.
class BudgetError : public Error {
public:
  using Error::Error;
};

}  // namespace pubgoods
