#pragma once

#include <functional>
#include <vector>

#include "transmon/decay_spectrum.hpp"

namespace transmon {

/// Sampled spectrum. energies strictly increasing; u_ff, gamma2 >= 0.
struct SpectralGrid {
  std::vector<double> energies;
  std::vector<double> u_ff;
  std::vector<double> gamma2;
  std::vector<double> delta2;
  /// 0 for the coarse scan, k for points added by the k-th refinement pass.
  std::vector<int> refinement_level;
  /// False when the refinement budget ran out before every peak was resolved.
  bool complete = true;

  std::size_t size() const noexcept { return energies.size(); }
  /// Trapezoidal integral of u_ff over the grid.
  double integral() const;
  /// Largest spacing between neighbouring energies.
  double max_step() const;
};

struct GridOptions {
  double lo = -15.0;  ///< offsets from b
  double hi = 15.0;
  double coarse_step = 0.005;
  /// Points required across each peak's full width at half maximum.
  int points_per_fwhm = 20;
  double min_step = 1e-6;
  int max_passes = 4;
  /// Local maxima lower than this fraction of the tallest one are not refined around.
  double min_relative_height = 1e-4;
};

/// Coarse uniform scan plus local refinement around sign changes of the
/// resonance function and local maxima of U_ff.
SpectralGrid build_grid(const DecaySpectrum& spectrum, const GridOptions& opt = {});

/// Same refinement driven by an arbitrary spectral function (gamma2/delta2 are
/// left zero). `center` plays the role of b.
SpectralGrid build_grid(const std::function<double(double)>& u, double center,
                        const GridOptions& opt = {});

}  // namespace transmon
