#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "transmon/decay_spectrum.hpp"
#include "transmon/spectral_grid.hpp"

namespace transmon {

enum class ResonanceKind { root, peak };
std::string_view to_string(ResonanceKind k) noexcept;

struct ResonanceRecord {
  double y_r = 0.0;
  ResonanceKind kind = ResonanceKind::root;
  double height = 0.0;  ///< U(y_r)·delta
  std::optional<double> fwhm;
  /// Two roots closer than the merge distance collapsed into this one.
  bool degenerate = false;
  /// fwhm is the attainable width only: a neighbour rose above half height first.
  bool overlapped = false;
  /// For peaks: index into the root list of the paired root, if any.
  std::optional<std::size_t> paired_root;
};

struct RootOptions {
  double lo = -12.0;  ///< scan range as offsets from b
  double hi = 12.0;
  double step = 0.01;
  double tolerance = 1e-10;
  double merge_distance = 1e-5;
};

/// All zeros of y - b - Delta_2(y) on the scan range, sorted, each with U(y_r).
/// Throws NumericalError if the function changes sign at the range boundary.
std::vector<ResonanceRecord> find_roots(const DecaySpectrum& spectrum,
                                        const RootOptions& opt = {});

struct PeakOptions {
  /// Local maxima below this fraction of the tallest maximum are dropped.
  double min_relative_height = 0.05;
};

/// Local maxima of the sampled U_ff, located by a three-point parabola.
std::vector<ResonanceRecord> find_peaks(const SpectralGrid& grid, const PeakOptions& opt = {});

/// Moves each peak onto the true maximum of `u` by golden-section search inside
/// the bracketing grid cells.
void polish_peaks(std::vector<ResonanceRecord>& peaks, const SpectralGrid& grid,
                  const std::function<double(double)>& u);

struct FwhmResult {
  double width = 0.0;
  bool overlapped = false;
};

/// Full width at half maximum of the peak at record.y_r, located on each side by
/// bisection to 1e-8 relative. When a neighbouring feature climbs above the
/// peak before U falls to half height, that side contributes the distance to the
/// lowest point seen and `overlapped` is set.
FwhmResult fwhm(const ResonanceRecord& peak, const std::function<double(double)>& u);
FwhmResult fwhm(const ResonanceRecord& peak, const DecaySpectrum& spectrum);

/// Fills fwhm for every peak and pairs each with the nearest root lying within one FWHM.
void annotate_peaks(std::vector<ResonanceRecord>& peaks,
                    const std::vector<ResonanceRecord>& roots,
                    const DecaySpectrum& spectrum);

struct ResonanceReport {
  std::vector<ResonanceRecord> roots;
  std::vector<ResonanceRecord> peaks;
  SpectralGrid grid;
};

ResonanceReport analyze(const DecaySpectrum& spectrum, const GridOptions& grid_opt = {},
                        const RootOptions& root_opt = {}, const PeakOptions& peak_opt = {});

struct SweepPoint {
  double l2 = 0.0;
  std::vector<ResonanceRecord> roots;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  /// Smallest L2 with more than one root, refined by bisection; empty if the
  /// root count never exceeds one in range, or already does at the lower end.
  std::optional<double> crossover;
};

struct SweepOptions {
  double l2_min = 0.05;
  double l2_max = 6.0;
  int steps = 60;
  double crossover_tolerance = 1e-3;
  RootOptions roots{};
};

/// Re-solves the resonance condition for each L2 on a uniform grid. In the
/// coupled regimes L1 = (2/3) L2 throughout.
SweepResult sweep_coupling(const DimensionlessModel& m, Regime regime,
                           const SweepOptions& opt, const QuadratureSettings& s);

}  // namespace transmon
