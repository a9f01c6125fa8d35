#include "transmon/dawson.hpp"

#include "transmon/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace transmon {
namespace {

// Below this the positive power series exp(-x^2) sum x^(2n+1)/(n!(2n+1)) is
// used; every term is positive so there is no cancellation. Above it the
// asymptotic series' smallest term is below 1e-17.
constexpr double kSeriesLimit = 6.0;

double series(double x) {
  if (x == 0.0) return 0.0;
  const double x2 = x * x;
  double term = x;  // x^(2n+1)/n!
  double sum = x;
  for (int n = 1; n < 400; ++n) {
    term *= x2 / n;
    const double add = term / (2 * n + 1);
    sum += add;
    if (add < 1e-17 * sum) break;
  }
  return std::exp(-x2) * sum;
}

// D(x) ~ 1/(2x) sum_n (2n-1)!!/(2x^2)^n, truncated at its smallest term.
double asymptotic(double x) {
  const double inv = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 200; ++n) {
    const double next = term * (2 * n - 1) * inv;
    if (next >= term) break;
    term = next;
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum / (2.0 * x);
}

}  // namespace

double dawson(double x) noexcept {
  const double ax = std::fabs(x);
  const double d = ax < kSeriesLimit ? series(ax) : asymptotic(ax);
  return x < 0.0 ? -d : d;
}

double hilbert_gaussian(double x) noexcept {
  return 2.0 * kSqrtPi * dawson(x);
}

std::optional<double> dawson_fixed_point(double slope) {
  if (!(slope > 1.0) || !std::isfinite(slope)) return std::nullopt;
  // f(x) = x - slope D(x) is negative just above 0 and positive at x = slope,
  // since D < 1 everywhere.
  double lo = 0.0;
  double hi = slope;
  // Start the bracket off zero, where f vanishes trivially.
  double probe = 1e-3;
  while (probe - slope * dawson(probe) >= 0.0 && probe > 1e-300) probe *= 0.5;
  lo = probe;
  while (hi - lo > 1e-14 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (mid - slope * dawson(mid) < 0.0) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace transmon
