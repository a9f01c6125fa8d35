#include "transmon/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "transmon/error.hpp"
#include "transmon/parallel.hpp"

namespace transmon {
namespace {

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double flo,
                   double tol) {
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct HalfWidth {
  double distance = 0.0;
  bool overlapped = false;
};

// Distance from y0 to the half-height crossing on one side.
HalfWidth half_width(const std::function<double(double)>& u, double y0, double h, double side) {
  constexpr double kReach = 30.0;
  const double half = 0.5 * h;
  double inside = 0.0;  // last distance with u >= h/2
  double d = 1e-9 * std::max(1.0, std::fabs(y0));
  double min_value = h;
  double min_at = 0.0;
  while (d < kReach) {
    const double v = u(y0 + side * d);
    if (v < half) break;
    if (v < min_value) {
      min_value = v;
      min_at = d;
    }
    // Climbed past the peak after dipping: a neighbouring feature.
    if (v > h && min_value < 0.99 * h) return {min_at, true};
    inside = d;
    d *= 1.25;
  }
  if (d >= kReach) return {min_at > 0.0 ? min_at : inside, true};
  double outside = d;
  while (outside - inside > 1e-8 * outside) {
    const double mid = 0.5 * (inside + outside);
    (u(y0 + side * mid) >= half ? inside : outside) = mid;
  }
  return {0.5 * (inside + outside), false};
}

double golden_max(const std::function<double(double)>& f, double lo, double hi) {
  constexpr double r = 0.6180339887498949;
  double x1 = hi - r * (hi - lo);
  double x2 = lo + r * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < 200 && hi - lo > 1e-13 * std::max(1.0, std::fabs(lo)); ++i) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = f(x1);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::string_view to_string(ResonanceKind k) noexcept {
  return k == ResonanceKind::root ? "root" : "peak";
}

std::vector<ResonanceRecord> find_roots(const DecaySpectrum& spectrum, const RootOptions& opt) {
  if (!(opt.hi > opt.lo) || !(opt.step > 0.0)) throw InvalidArgument("invalid root scan range");
  const double b = spectrum.model().b();
  const auto n = static_cast<std::size_t>(std::ceil((opt.hi - opt.lo) / opt.step));
  const double step = (opt.hi - opt.lo) / static_cast<double>(n);
  std::vector<double> ys(n + 1);
  std::vector<double> fs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) ys[i] = b + opt.lo + static_cast<double>(i) * step;
  // Pin the center so that an exact root at b lands on a grid point.
  const auto mid = static_cast<std::size_t>(std::llround(-opt.lo / step));
  if (mid <= n && std::fabs(ys[mid] - b) < 1e-9 * step) ys[mid] = b;
  detail::parallel_for(ys.size(), [&](std::size_t i) { fs[i] = spectrum.resonance_function(ys[i]); });

  if (fs.front() >= 0.0 || fs.back() <= 0.0) {
    throw NumericalError("resonance function changes sign outside [b" + std::to_string(opt.lo) +
                         ", b+" + std::to_string(opt.hi) + "]; widen the scan range");
  }

  auto f = [&spectrum](double y) { return spectrum.resonance_function(y); };
  std::vector<double> located;
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
    if (fs[i] == 0.0) {
      located.push_back(ys[i]);
    } else if (fs[i + 1] != 0.0 && (fs[i] < 0.0) != (fs[i + 1] < 0.0)) {
      located.push_back(bisect_root(f, ys[i], ys[i + 1], fs[i], opt.tolerance));
    }
  }

  std::vector<ResonanceRecord> out;
  for (double y : located) {
    if (!out.empty() && y - out.back().y_r < opt.merge_distance) {
      out.back().degenerate = true;
      out.back().y_r = 0.5 * (out.back().y_r + y);
      continue;
    }
    ResonanceRecord r;
    r.y_r = y;
    r.kind = ResonanceKind::root;
    out.push_back(r);
  }
  for (auto& r : out) r.height = spectrum.spectral_function(r.y_r);
  return out;
}

std::vector<ResonanceRecord> find_peaks(const SpectralGrid& grid, const PeakOptions& opt) {
  std::vector<ResonanceRecord> out;
  const auto& y = grid.energies;
  const auto& u = grid.u_ff;
  if (y.size() < 3) return out;
  const double tallest = *std::max_element(u.begin(), u.end());
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (!(u[i] > u[i - 1] && u[i] >= u[i + 1])) continue;
    if (u[i] < opt.min_relative_height * tallest) continue;
    // Vertex of the parabola through the three samples.
    const double x0 = y[i - 1] - y[i];
    const double x2 = y[i + 1] - y[i];
    const double d0 = u[i - 1] - u[i];
    const double d2 = u[i + 1] - u[i];
    const double denom = x0 * x2 * (x0 - x2);
    double shift = 0.0;
    double height = u[i];
    if (denom != 0.0) {
      const double ca = (d0 * x2 - d2 * x0) / denom;
      const double cb = (d2 * x0 * x0 - d0 * x2 * x2) / denom;
      if (ca < 0.0) {
        shift = std::clamp(-cb / (2.0 * ca), x0, x2);
        height = u[i] + cb * shift + ca * shift * shift;
      }
    }
    ResonanceRecord r;
    r.y_r = y[i] + shift;
    r.kind = ResonanceKind::peak;
    r.height = std::max(height, u[i]);
    out.push_back(r);
  }
  return out;
}

void polish_peaks(std::vector<ResonanceRecord>& peaks, const SpectralGrid& grid,
                  const std::function<double(double)>& u) {
  const auto& y = grid.energies;
  for (auto& p : peaks) {
    auto it = std::lower_bound(y.begin(), y.end(), p.y_r);
    auto i = static_cast<std::size_t>(it - y.begin());
    const std::size_t lo = i >= 2 ? i - 2 : 0;
    const std::size_t hi = std::min(i + 1, y.size() - 1);
    const double best = golden_max(u, y[lo], y[hi]);
    const double h = u(best);
    if (h >= p.height * (1.0 - 1e-12)) {
      p.y_r = best;
      p.height = h;
    }
  }
}

FwhmResult fwhm(const ResonanceRecord& peak, const std::function<double(double)>& u) {
  if (!(peak.height > 0.0)) throw InvalidArgument("fwhm needs a peak with positive height");
  const HalfWidth left = half_width(u, peak.y_r, peak.height, -1.0);
  const HalfWidth right = half_width(u, peak.y_r, peak.height, +1.0);
  return {left.distance + right.distance, left.overlapped || right.overlapped};
}

FwhmResult fwhm(const ResonanceRecord& peak, const DecaySpectrum& spectrum) {
  return fwhm(peak, [&spectrum](double y) { return spectrum.spectral_function(y); });
}

void annotate_peaks(std::vector<ResonanceRecord>& peaks, const std::vector<ResonanceRecord>& roots,
                    const DecaySpectrum& spectrum) {
  for (auto& p : peaks) {
    const FwhmResult w = fwhm(p, spectrum);
    p.fwhm = w.width;
    p.overlapped = w.overlapped;
    double best = w.width;
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const double d = std::fabs(roots[k].y_r - p.y_r);
      if (d <= best) {
        best = d;
        p.paired_root = k;
      }
    }
  }
}

ResonanceReport analyze(const DecaySpectrum& spectrum, const GridOptions& grid_opt,
                        const RootOptions& root_opt, const PeakOptions& peak_opt) {
  ResonanceReport report;
  report.grid = build_grid(spectrum, grid_opt);
  report.roots = find_roots(spectrum, root_opt);
  report.peaks = find_peaks(report.grid, peak_opt);
  polish_peaks(report.peaks, report.grid,
               [&spectrum](double y) { return spectrum.spectral_function(y); });
  annotate_peaks(report.peaks, report.roots, spectrum);
  return report;
}

SweepResult sweep_coupling(const DimensionlessModel& m, Regime regime, const SweepOptions& opt,
                           const QuadratureSettings& s) {
  if (opt.steps < 1 || !(opt.l2_min > 0.0) || opt.l2_max < opt.l2_min) {
    throw InvalidArgument("sweep needs 0 < l2_min <= l2_max and steps >= 1");
  }
  const bool v1 = regime != Regime::stable_second_level;
  auto roots_at = [&](double l2) {
    const DecaySpectrum spectrum(m, CouplingConfig::transmon(l2, v1), regime, s);
    return find_roots(spectrum, opt.roots);
  };

  SweepResult result;
  result.points.resize(static_cast<std::size_t>(opt.steps));
  const double dl = opt.steps > 1 ? (opt.l2_max - opt.l2_min) / (opt.steps - 1) : 0.0;
  for (int i = 0; i < opt.steps; ++i) {
    result.points[static_cast<std::size_t>(i)].l2 = opt.l2_min + i * dl;
  }
  if (opt.steps > 1) result.points.back().l2 = opt.l2_max;
  // Roots are found serially per L2 here; find_roots parallelizes its own scan.
  for (auto& p : result.points) p.roots = roots_at(p.l2);

  auto split = [&](const SweepPoint& p) { return p.roots.size() > 1; };
  const auto first = std::find_if(result.points.begin(), result.points.end(), split);
  if (first != result.points.end() && first != result.points.begin()) {
    double lo = std::prev(first)->l2;
    double hi = first->l2;
    while (hi - lo > opt.crossover_tolerance) {
      const double mid = 0.5 * (lo + hi);
      (roots_at(mid).size() > 1 ? hi : lo) = mid;
    }
    result.crossover = hi;
  }
  return result;
}

}  // namespace transmon
