#include "transmon/time_domain.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "transmon/error.hpp"
#include "transmon/parallel.hpp"

namespace transmon {

double resolvable_horizon(const SpectralGrid& grid) {
  const double h = grid.max_step();
  return h > 0.0 ? std::numbers::pi / h : 0.0;
}

SurvivalSeries survival_amplitude(const SpectralGrid& grid, double center,
                                  std::span<const double> times) {
  if (grid.size() < 2) throw InvalidArgument("survival_amplitude needs at least two grid points");
  const double horizon = resolvable_horizon(grid);
  for (double t : times) {
    if (!(std::fabs(t) <= horizon)) {
      throw InvalidArgument("time " + std::to_string(t) + " exceeds the resolvable horizon " +
                            std::to_string(horizon) + " of the spectral grid");
    }
  }
  SurvivalSeries out;
  out.times.assign(times.begin(), times.end());
  out.amplitude.resize(times.size());
  out.magnitude.resize(times.size());
  const auto& e = grid.energies;
  const auto& u = grid.u_ff;
  detail::parallel_for(times.size(), [&](std::size_t k) {
    const double t = times[k];
    std::complex<double> sum{};
    auto term = [&](std::size_t i) {
      return u[i] * std::polar(1.0, -(e[i] - center) * t);
    };
    std::complex<double> prev = term(0);
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      const std::complex<double> next = term(i + 1);
      sum += 0.5 * (prev + next) * (e[i + 1] - e[i]);
      prev = next;
    }
    out.amplitude[k] = sum;
    out.magnitude[k] = std::abs(sum);
  });
  return out;
}

std::vector<double> uniform_times(double t_max, double dt) {
  if (!(dt > 0.0) || !(t_max >= 0.0)) throw InvalidArgument("need dt > 0 and t_max >= 0");
  const auto n = static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
  std::vector<double> ts(n + 1);
  for (std::size_t i = 0; i <= n; ++i) ts[i] = static_cast<double>(i) * dt;
  return ts;
}

namespace {

// Least-squares slope of log(v) against t.
double log_slope(const std::vector<double>& t, const std::vector<double>& v) {
  const auto n = static_cast<double>(t.size());
  double st = 0, sl = 0, stt = 0, stl = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double l = std::log(v[i]);
    st += t[i];
    sl += l;
    stt += t[i] * t[i];
    stl += t[i] * l;
  }
  const double denom = n * stt - st * st;
  return denom != 0.0 ? (n * stl - st * sl) / denom : 0.0;
}

constexpr double kNoiseFloor = 1e-3;

}  // namespace

RabiMetrics rabi_metrics(const SurvivalSeries& series) {
  const auto& t = series.times;
  const auto& m = series.magnitude;
  if (t.size() < 3) throw InvalidArgument("rabi_metrics needs at least three samples");

  // The envelope fit stops at the first maximum this far below the start; past
  // it the non-exponential tail and synthesis noise take over.
  const double floor = kNoiseFloor * m.front();
  std::vector<double> peak_t;
  std::vector<double> peak_v;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    if (m[i] > m[i - 1] && m[i] >= m[i + 1] && m[i] > 0.0) {
      if (m[i] < floor) break;
      // Parabolic refinement on the uniform time grid.
      const double d = m[i - 1] - 2.0 * m[i] + m[i + 1];
      const double off = d != 0.0 ? 0.5 * (m[i - 1] - m[i + 1]) / d : 0.0;
      const double dt = t[i + 1] - t[i];
      peak_t.push_back(t[i] + off * dt);
      peak_v.push_back(m[i] - 0.25 * (m[i - 1] - m[i + 1]) * off);
    }
  }

  RabiMetrics r;
  r.maxima = static_cast<int>(peak_t.size());
  if (peak_t.size() >= 3) {
    const double spacing = (peak_t.back() - peak_t.front()) / static_cast<double>(peak_t.size() - 1);
    r.beat_period = spacing;
    r.rabi_angular_frequency = std::numbers::pi / spacing;
    r.rabi_period = 2.0 * spacing;
    const double slope = log_slope(peak_t, peak_v);
    r.decay_time = slope < 0.0 ? -0.5 / slope : std::numeric_limits<double>::infinity();
    return r;
  }
  std::vector<double> ft;
  std::vector<double> fv;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (m[i] < floor) break;
    ft.push_back(t[i]);
    fv.push_back(m[i]);
  }
  const double slope = ft.size() >= 2 ? log_slope(ft, fv) : 0.0;
  r.decay_time = slope < 0.0 ? -0.5 / slope : std::numeric_limits<double>::infinity();
  return r;
}

}  // namespace transmon
