#pragma once

#include <stdexcept>
#include <string>

namespace naqc {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix failed the Hermitian symmetry check.
class NotHermitian : public Error {
 public:
  using Error::Error;
};

/// An iterative solver exceeded its budget.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// A probability vector has negative entries or does not sum to one.
class NotADistribution : public Error {
 public:
  using Error::Error;
};

/// Matrix or state dimensions do not match the operation's requirements.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The requested dimension is outside the supported set (primes >= 2).
class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

/// An index list is not a bijection on the expected range.
class NotAPermutation : public Error {
 public:
  using Error::Error;
};

/// A scalar argument is outside its documented range.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A constructed value violates a type invariant (bad trace, negative
/// eigenvalue beyond tolerance, non-finite entries, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace naqc
