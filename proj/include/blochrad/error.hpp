#pragma once

#include <stdexcept>
#include <string>

namespace blochrad {

// Base of every error raised by the library. The C API maps each subclass to
// its own status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of a formula (e.g. r >= 1/sqrt(3)).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation hit a near-singular denominator or produced a non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// Iterative solver ran out of steps before reaching its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// A disc center left the validity interval of an inscribed-disc formula.
class IntervalError : public Error {
 public:
  using Error::Error;
};

// Operation not defined for the requested region.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace blochrad
