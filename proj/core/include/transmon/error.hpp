#pragma once

#include <stdexcept>
#include <string>

namespace transmon {

/// Invalid parameters or violated preconditions.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed to reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature exhausted its subdivision budget.
class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, double estimate, double error_estimate)
      : NumericalError(what), estimate_(estimate), error_estimate_(error_estimate) {}

  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

/// Gamma underflowed to zero exactly on a resonance, so U_ff is 0/0.
class DegeneratePoint : public NumericalError {
 public:
  explicit DegeneratePoint(double detuning)
      : NumericalError("degenerate spectral point: width underflow on a resonance at y-b=" +
                       std::to_string(detuning)),
        detuning_(detuning) {}
  double detuning() const noexcept { return detuning_; }

 private:
  double detuning_;
};

/// A discrete-mode energy denominator landed on a mode without regularization.
class PoleCollision : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace transmon
