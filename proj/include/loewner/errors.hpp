#pragma once

#include <stdexcept>
#include <string>

namespace loewner {

/// Base class for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of an operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Numerical breakdown: a vanishing denominator, a missing root bracket,
/// a control that left the neighbourhood of pi.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A vanishing control denominator at time `t`.
class DenominatorVanishing : public NumericalError {
 public:
  explicit DenominatorVanishing(double t)
      : NumericalError("denominator vanishing at t=" + std::to_string(t)), t_(t) {}
  double t() const noexcept { return t_; }

 private:
  double t_;
};

/// Parameters outside the domain where u = pi is the unique maximizer of H.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace loewner
