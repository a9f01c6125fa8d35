#pragma once

// Brute-force discrete-mode sums for the self-energies. As the mode spacing
// shrinks they converge to the continuum integrals, which makes them an
// independent check on the closed forms and the adaptive quadrature.

#include <vector>

#include "transmon/model.hpp"
#include "transmon/self_energy.hpp"

namespace transmon {

struct DiscretizationSpec {
  double mode_spacing = 0.01;
  /// Mode band; defaults cover both Gaussian centers +- 10 widths when left empty.
  double band_lo = 0.0;
  double band_hi = 0.0;
  /// Width of the Lorentzians standing in for delta functions.
  double pole_offset = 0.02;
  /// Anchor the mode grid so energy denominators sit halfway between modes.
  bool symmetric_placement = true;

  /// Spacing `dw`, band from the model, pole_offset = 2 dw.
  static DiscretizationSpec for_spacing(const DimensionlessModel& m, double dw);
  void validate() const;
};

struct DiscreteSelfEnergy1 {
  ShiftWidth total;
  /// The k' = k terms g_1^2(k)/(2(E - 2w_k)) and pi g_1^2(k) delta(E - 2 w_k).
  ShiftWidth self_term;
};

/// Delta_1 and Gamma_1 at (y, w) summed over modes, w itself treated as a mode.
DiscreteSelfEnergy1 discrete_self_energy_1(double y, double w, const DiscretizationSpec& spec,
                                           const DimensionlessModel& m,
                                           const CouplingConfig& c);

/// Delta_2 and Gamma_2 at y with discrete Delta_1/Gamma_1 inside the mode sum.
ShiftWidth discrete_self_energy_2(double y, const DiscretizationSpec& spec,
                                  const DimensionlessModel& m, const CouplingConfig& c);

struct ConvergenceRow {
  double spacing = 0.0;
  double max_shift_error = 0.0;  ///< max |dDelta_2| / |Sigma_2| over energies
  double max_width_error = 0.0;  ///< max |dGamma_2| / |Sigma_2| over energies
  double max_error() const noexcept {
    return max_shift_error > max_width_error ? max_shift_error : max_width_error;
  }
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  bool monotone = true;
};

struct ConvergenceOptions {
  bool symmetric_placement = true;
  /// Lorentzian width as a multiple of the mode spacing.
  double pole_offset_ratio = 2.0;
};

/// Per-spacing deviation of the discrete sums from the continuum evaluator, with
/// errors normalized by |Sigma_2| = sqrt(Delta_2^2 + Gamma_2^2/4). `spacings`
/// must be non-empty and strictly decreasing.
ConvergenceReport convergence_report(const std::vector<double>& energies,
                                     const std::vector<double>& spacings,
                                     const DimensionlessModel& m, const CouplingConfig& c,
                                     const ConvergenceOptions& opt = {});

}  // namespace transmon
