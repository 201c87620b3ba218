#pragma once

#include <stdexcept>
#include <string>

namespace mipoly {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the range where the requested construction is defined,
/// or a Pochhammer denominator vanished for the given values.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// x -> infinity limit requested for a genuinely Laurent polynomial.
class NegativePowers : public Error {
 public:
  using Error::Error;
};

/// A lower Pochhammer factor of a basic hypergeometric sum vanished
/// before the series terminated.
class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class DegenerateCasoratian : public Error {
 public:
  using Error::Error;
};

class DenominatorZeroAtInteger : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

class RootFindingFailure : public Error {
 public:
  using Error::Error;
};

/// An exactness guarantee failed (non-exact division, non-polynomial result).
/// Signals a bug rather than bad input.
class InternalInvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace mipoly
