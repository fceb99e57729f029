#pragma once

#include <stdexcept>
#include <string>

namespace weibullr {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the called function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A distribution parameter violates its constraint. `field()` names it.
class ParameterError : public Error {
 public:
  ParameterError(std::string field, const std::string& what)
      : Error("invalid parameter '" + field + "': " + what),
        field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Base for failures of a numerical procedure on otherwise valid input.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// An integral or series does not converge. Carries the last two estimates.
class DivergenceError : public NumericalError {
 public:
  DivergenceError(const std::string& what, double previous, double last)
      : NumericalError(what), previous_(previous), last_(last) {}

  double previous_estimate() const noexcept { return previous_; }
  double last_estimate() const noexcept { return last_; }

 private:
  double previous_;
  double last_;
};

/// An iteration hit its cap before meeting its tolerance.
class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// An alternating sum lost too many digits to be trusted.
class CancellationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class FitError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace weibullr
