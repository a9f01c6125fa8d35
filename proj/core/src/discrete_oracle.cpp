#include "transmon/discrete_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "transmon/decay_spectrum.hpp"
#include "transmon/error.hpp"
#include "transmon/parallel.hpp"

namespace transmon {
namespace {

struct ModeGrid {
  double origin;
  double spacing;
  std::size_t count;
  double at(std::size_t j) const { return origin + static_cast<double>(j) * spacing; }
};

// With symmetric placement, `pole_sum` (the value of w_k + w_k' at which the
// two-photon denominators vanish) lands halfway between attainable sums.
ModeGrid make_grid(const DiscretizationSpec& spec, double pole_sum) {
  const double dw = spec.mode_spacing;
  double origin = spec.band_lo;
  if (spec.symmetric_placement) {
    const double base = 0.5 * (pole_sum - 0.5 * dw);
    const double half = 0.5 * dw;
    origin = base - std::floor((base - spec.band_lo) / half) * half;
  }
  const auto count =
      static_cast<std::size_t>(std::floor((spec.band_hi - origin) / dw)) + 1;
  return {origin, dw, count};
}

double lorentzian(double x, double eps) {
  return eps * std::numbers::inv_pi / (x * x + eps * eps);
}

void check_pole(double x, const DiscretizationSpec& spec) {
  if (std::fabs(x) < 1e-9 * spec.mode_spacing) {
    throw PoleCollision("energy denominator " + std::to_string(x) +
                        " coincides with a mode; enable symmetric placement or shift the grid");
  }
}

// Delta_1/Gamma_1 at mode index k on a fixed grid; g1 holds g_1^2(w_j) dw.
DiscreteSelfEnergy1 inner(double y, std::size_t k, const ModeGrid& grid,
                          const std::vector<double>& g1, const DiscretizationSpec& spec) {
  const double wk = grid.at(k);
  const double eps = spec.pole_offset;
  double shift = 0.0;
  double width = 0.0;
  for (std::size_t j = 0; j < grid.count; ++j) {
    if (g1[j] == 0.0) continue;
    const double x = y - wk - grid.at(j);
    check_pole(x, spec);
    shift += g1[j] / x;
    width += 2.0 * std::numbers::pi * g1[j] * lorentzian(x, eps);
  }
  const double x_self = y - 2.0 * wk;
  check_pole(x_self, spec);
  const ShiftWidth self{g1[k] / (2.0 * x_self), std::numbers::pi * g1[k] * lorentzian(x_self, eps)};
  return {{shift + self.shift, width + self.width}, self};
}

std::vector<double> weights(const ModeGrid& grid, const DimensionlessModel& m,
                            const CouplingConfig& c, Transition t) {
  std::vector<double> g(grid.count);
  for (std::size_t j = 0; j < grid.count; ++j) {
    g[j] = coupling_sq(m, c, t, grid.at(j)) * grid.spacing;
  }
  return g;
}

}  // namespace

DiscretizationSpec DiscretizationSpec::for_spacing(const DimensionlessModel& m, double dw) {
  DiscretizationSpec spec;
  spec.mode_spacing = dw;
  spec.band_lo = std::min(m.center(Transition::eg), m.center(Transition::fe)) - 10.0;
  spec.band_hi = std::max(m.center(Transition::eg), m.center(Transition::fe)) + 10.0;
  spec.pole_offset = 2.0 * dw;
  return spec;
}

void DiscretizationSpec::validate() const {
  if (!(mode_spacing > 0.0)) throw InvalidArgument("mode_spacing must be positive");
  if (!(band_hi > band_lo)) throw InvalidArgument("mode band is empty");
  if (!(pole_offset > 0.0)) {
    throw PoleCollision("pole_offset must be positive: delta functions need a finite width");
  }
}

DiscreteSelfEnergy1 discrete_self_energy_1(double y, double w, const DiscretizationSpec& spec,
                                           const DimensionlessModel& m,
                                           const CouplingConfig& c) {
  spec.validate();
  if (!c.v1_enabled) return {};
  const double dw = spec.mode_spacing;
  double origin = spec.band_lo;
  if (spec.symmetric_placement) {
    // Put the pole w' = y - w at origin + (n + 1/2) dw.
    const double shifted = y - w - 0.5 * dw - spec.band_lo;
    origin = spec.band_lo + (shifted - std::floor(shifted / dw) * dw);
  }
  const ModeGrid grid{origin, dw,
                      static_cast<std::size_t>(std::floor((spec.band_hi - origin) / dw)) + 1};
  const auto g1 = weights(grid, m, c, Transition::eg);
  const double eps = spec.pole_offset;
  double shift = 0.0;
  double width = 0.0;
  for (std::size_t j = 0; j < grid.count; ++j) {
    const double x = y - w - grid.at(j);
    check_pole(x, spec);
    shift += g1[j] / x;
    width += 2.0 * std::numbers::pi * g1[j] * lorentzian(x, eps);
  }
  // w itself is one of the modes: its k' = k term.
  const double gw = coupling_sq(m, c, Transition::eg, w) * dw;
  const double x_self = y - 2.0 * w;
  check_pole(x_self, spec);
  const ShiftWidth self{gw / (2.0 * x_self), std::numbers::pi * gw * lorentzian(x_self, eps)};
  return {{shift + self.shift, width + self.width}, self};
}

ShiftWidth discrete_self_energy_2(double y, const DiscretizationSpec& spec,
                                  const DimensionlessModel& m, const CouplingConfig& c) {
  spec.validate();
  const ModeGrid grid = make_grid(spec, y);
  const auto g1 = weights(grid, m, c, Transition::eg);
  const auto g2 = weights(grid, m, c, Transition::fe);
  const double eta = spec.pole_offset;
  const double c2 = m.center(Transition::fe);
  double shift = 0.0;
  double width = 0.0;
  for (std::size_t k = 0; k < grid.count; ++k) {
    const double d = grid.at(k) - c2;
    if (d * d > 41.0) continue;  // exp(-41) ~ 1e-18 of the peak weight
    ShiftWidth s1{};
    if (c.v1_enabled) s1 = inner(y, k, grid, g1, spec).total;
    const double x = y - m.a() - grid.at(k) - s1.shift;
    const double half = 0.5 * s1.width + eta;
    const double denom = x * x + half * half;
    shift += g2[k] * x / denom;
    width += g2[k] * 2.0 * half / denom;
  }
  return {shift, width};
}

ConvergenceReport convergence_report(const std::vector<double>& energies,
                                     const std::vector<double>& spacings,
                                     const DimensionlessModel& m, const CouplingConfig& c,
                                     const ConvergenceOptions& opt) {
  if (spacings.empty()) throw InvalidArgument("convergence_report needs at least one spacing");
  if (energies.empty()) throw InvalidArgument("convergence_report needs at least one energy");
  for (std::size_t i = 1; i < spacings.size(); ++i) {
    if (!(spacings[i] < spacings[i - 1])) {
      throw InvalidArgument("spacings must be strictly decreasing");
    }
  }
  const Regime regime = c.v1_enabled ? Regime::full_coupling : Regime::stable_second_level;
  const DecaySpectrum continuum(m, c, regime, QuadratureSettings{});
  std::vector<ShiftWidth> exact(energies.size());
  detail::parallel_for(energies.size(),
                       [&](std::size_t i) { exact[i] = continuum.self_energy(energies[i]); });

  ConvergenceReport report;
  for (double dw : spacings) {
    auto spec = DiscretizationSpec::for_spacing(m, dw);
    spec.symmetric_placement = opt.symmetric_placement;
    spec.pole_offset = opt.pole_offset_ratio * dw;
    spec.validate();
    std::vector<ShiftWidth> approx(energies.size());
    detail::parallel_for(energies.size(), [&](std::size_t i) {
      approx[i] = discrete_self_energy_2(energies[i], spec, m, c);
    });
    ConvergenceRow row;
    row.spacing = dw;
    for (std::size_t i = 0; i < energies.size(); ++i) {
      const double scale = std::hypot(exact[i].shift, 0.5 * exact[i].width);
      row.max_shift_error =
          std::max(row.max_shift_error, std::fabs(approx[i].shift - exact[i].shift) / scale);
      row.max_width_error =
          std::max(row.max_width_error, std::fabs(approx[i].width - exact[i].width) / scale);
    }
    if (!report.rows.empty() && !(row.max_error() < report.rows.back().max_error())) {
      report.monotone = false;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace transmon
