#pragma once

#include <stdexcept>
#include <string>

namespace loschmidt {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (dimension mismatch,
/// unsupported order, unknown preset, estimator/system incompatibility).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two function families cannot be combined by coefficient arithmetic.
class IncompatibleFamilies : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A computation was aborted because its numerical result would be
/// meaningless: grid aliasing or edge leakage, trajectory escape, singular
/// Gaussian exponent.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class TrajectoryEscape : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class GridAliasing : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularExponent : public NumericalError {
 public:
  SingularExponent(const std::string& what, double condition)
      : NumericalError(what), condition_(condition) {}
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

}  // namespace loschmidt
