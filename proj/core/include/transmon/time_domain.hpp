#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "transmon/spectral_grid.hpp"

namespace transmon {

/// Survival amplitude U_ff(t) with the carrier exp(-i b t) divided out.
struct SurvivalSeries {
  std::vector<double> times;  ///< t·delta
  std::vector<std::complex<double>> amplitude;
  std::vector<double> magnitude;
};

/// Largest time the trapezoid synthesis resolves on `grid`: pi / max_step.
double resolvable_horizon(const SpectralGrid& grid);

/// Trapezoidal evaluation of int U_ff(E) exp(-i (E - center) t) dE on the grid.
/// Throws InvalidArgument if any requested time exceeds resolvable_horizon().
SurvivalSeries survival_amplitude(const SpectralGrid& grid, double center,
                                  std::span<const double> times);

/// Uniform times 0, dt, ..., up to t_max.
std::vector<double> uniform_times(double t_max, double dt);

struct RabiMetrics {
  /// Mean spacing of interior maxima of |U(t)|.
  std::optional<double> beat_period;
  /// Rabi angular frequency pi / beat_period, i.e. (E_r2 - E_r1)/2 for two peaks.
  std::optional<double> rabi_angular_frequency;
  /// Period 2 pi / rabi_angular_frequency.
  std::optional<double> rabi_period;
  /// Decay time of |U|^2 from a log-linear fit to the envelope.
  double decay_time = 0.0;
  int maxima = 0;
};

/// Envelope fit over interior maxima of |U| when there are at least three;
/// otherwise a decay-only fit over the leading samples. Both stop at the first
/// value below 1e-3 |U(0)|.
RabiMetrics rabi_metrics(const SurvivalSeries& series);

}  // namespace transmon
