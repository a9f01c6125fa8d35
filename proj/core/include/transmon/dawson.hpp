#pragma once

#include <optional>

namespace transmon {

/// Dawson's integral D(x) = exp(-x^2) * int_0^x exp(t^2) dt, absolute error < 1e-12.
double dawson(double x) noexcept;

/// PV int_{-inf}^{inf} exp(-t^2)/(x - t) dt = 2 sqrt(pi) D(x).
double hilbert_gaussian(double x) noexcept;

/// Positive solution of x = slope * D(x), to 1e-14 absolute. Exists only for
/// slope > 1 (D'(0) = 1). With slope = 4 L2 this is the side-resonance offset
/// of the stable second level.
std::optional<double> dawson_fixed_point(double slope);

}  // namespace transmon
