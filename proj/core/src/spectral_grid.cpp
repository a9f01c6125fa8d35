#include "transmon/spectral_grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "transmon/error.hpp"
#include "transmon/parallel.hpp"
#include "transmon/resonance.hpp"

namespace transmon {
namespace {

struct Sample {
  double delta = 0.0;
  double gamma = 0.0;
  double u = 0.0;
};

using Evaluator = std::function<Sample(double)>;
using Scalar = std::function<double(double)>;

struct Point {
  double y;
  Sample s;
  int level;
};

std::vector<Point> evaluate(const std::vector<double>& ys, int level, const Evaluator& eval) {
  std::vector<Point> out(ys.size());
  detail::parallel_for(ys.size(), [&](std::size_t i) { out[i] = {ys[i], eval(ys[i]), level}; });
  return out;
}

// Bisection on a bracketed sign change of f.
double bisect(const Scalar& f, double lo, double hi, double flo) {
  for (int i = 0; i < 200 && hi - lo > 1e-13 * std::max(1.0, std::fabs(lo)); ++i) {
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

// Dense uniform core of +-4 W around y0, then geometrically growing steps until
// the coarse spacing is reached.
std::vector<double> patch(double y0, double step, double width, double coarse, double lo,
                          double hi) {
  std::vector<double> ys;
  const double core = 4.0 * width;
  const int n = static_cast<int>(std::ceil(core / step));
  for (int j = -n; j <= n; ++j) ys.push_back(y0 + j * step);
  double s = step;
  double pos = n * step;
  while (s < coarse) {
    s *= 1.1;
    pos += s;
    ys.push_back(y0 + pos);
    ys.push_back(y0 - pos);
  }
  std::erase_if(ys, [&](double y) { return y < lo || y > hi; });
  return ys;
}

class GridBuilder {
 public:
  GridBuilder(Evaluator eval, Scalar resonance, Scalar u, double center, const GridOptions& opt)
      : eval_(std::move(eval)), resonance_(std::move(resonance)), u_(std::move(u)),
        center_(center), opt_(opt) {}

  SpectralGrid run() {
    if (!(opt_.hi > opt_.lo) || !(opt_.coarse_step > 0.0) || opt_.points_per_fwhm < 2) {
      throw InvalidArgument("invalid grid options");
    }
    lo_ = center_ + opt_.lo;
    hi_ = center_ + opt_.hi;
    const auto n = static_cast<std::size_t>(std::llround((opt_.hi - opt_.lo) / opt_.coarse_step));
    std::vector<double> ys(n + 1);
    for (std::size_t i = 0; i <= n; ++i) ys[i] = lo_ + static_cast<double>(i) * opt_.coarse_step;
    ys.back() = hi_;
    points_ = evaluate(ys, 0, eval_);

    bool complete = true;
    for (int pass = 1; pass <= opt_.max_passes; ++pass) {
      std::vector<double> fresh;
      if (pass == 1 && resonance_) {
        for (double r : resonance_roots()) add_feature(r, 1, fresh, complete);
      }
      const auto unresolved = unresolved_maxima();
      if (unresolved.empty() && fresh.empty()) break;
      for (double y0 : unresolved) add_feature(y0, attempts_[key(y0)]++ + 1, fresh, complete);
      merge(evaluate(fresh, pass, eval_));
    }
    if (!unresolved_maxima().empty()) complete = false;

    SpectralGrid g;
    g.complete = complete;
    for (const auto& p : points_) {
      g.energies.push_back(p.y);
      g.delta2.push_back(p.s.delta);
      g.gamma2.push_back(p.s.gamma);
      g.u_ff.push_back(p.s.u);
      g.refinement_level.push_back(p.level);
    }
    return g;
  }

 private:
  long long key(double y) const { return std::llround(y / opt_.coarse_step); }

  std::vector<double> resonance_roots() const {
    std::vector<double> roots;
    const double b = center_;
    auto f = [&](std::size_t i) { return points_[i].y - b - points_[i].s.delta; };
    for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
      const double fi = f(i);
      const double fj = f(i + 1);
      if (fi == 0.0) {
        roots.push_back(points_[i].y);
      } else if ((fi < 0.0) != (fj < 0.0) && fj != 0.0) {
        roots.push_back(bisect(resonance_, points_[i].y, points_[i + 1].y, fi));
      }
    }
    return roots;
  }

  double max_u() const {
    double m = 0.0;
    for (const auto& p : points_) m = std::max(m, p.s.u);
    return m;
  }

  // Local maxima with fewer than points_per_fwhm samples at or above half height.
  std::vector<double> unresolved_maxima() const {
    std::vector<double> out;
    const double floor = opt_.min_relative_height * max_u();
    for (std::size_t i = 1; i + 1 < points_.size(); ++i) {
      const double h = points_[i].s.u;
      if (!(h > points_[i - 1].s.u && h >= points_[i + 1].s.u) || h < floor || h <= 0.0) continue;
      std::size_t l = i;
      std::size_t r = i;
      while (l > 0 && points_[l - 1].s.u >= 0.5 * h) --l;
      while (r + 1 < points_.size() && points_[r + 1].s.u >= 0.5 * h) ++r;
      const bool edge = l == 0 || r + 1 == points_.size();
      if (!edge && static_cast<int>(r - l + 1) < opt_.points_per_fwhm) out.push_back(points_[i].y);
    }
    return out;
  }

  void add_feature(double y0, int attempt, std::vector<double>& fresh, bool& complete) {
    ResonanceRecord rec;
    rec.y_r = y0;
    rec.kind = ResonanceKind::peak;
    rec.height = u_(y0);
    if (!(rec.height > 0.0)) return;
    const double width = fwhm(rec, u_).width;
    if (!(width > 0.0) || !std::isfinite(width)) return;
    double step = width / (2.0 * opt_.points_per_fwhm) / (1 << std::min(attempt - 1, 8));
    if (step >= opt_.coarse_step) return;
    if (step < opt_.min_step) {
      step = opt_.min_step;
      complete = false;
    }
    const auto ys = patch(y0, step, width, opt_.coarse_step, lo_, hi_);
    fresh.insert(fresh.end(), ys.begin(), ys.end());
  }

  void merge(std::vector<Point> added) {
    points_.insert(points_.end(), added.begin(), added.end());
    std::stable_sort(points_.begin(), points_.end(),
                     [](const Point& a, const Point& b) { return a.y < b.y; });
    // Keep the earliest-level point when two land within half a minimum step.
    std::vector<Point> kept;
    kept.reserve(points_.size());
    for (const auto& p : points_) {
      if (!kept.empty() && p.y - kept.back().y < 0.5 * opt_.min_step) {
        if (p.level < kept.back().level) kept.back() = p;
        continue;
      }
      kept.push_back(p);
    }
    points_ = std::move(kept);
  }

  Evaluator eval_;
  Scalar resonance_;
  Scalar u_;
  double center_;
  GridOptions opt_;
  double lo_ = 0.0;
  double hi_ = 0.0;
  std::vector<Point> points_;
  std::map<long long, int> attempts_;
};

}  // namespace

double SpectralGrid::integral() const {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < energies.size(); ++i) {
    sum += 0.5 * (u_ff[i] + u_ff[i + 1]) * (energies[i + 1] - energies[i]);
  }
  return sum;
}

double SpectralGrid::max_step() const {
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < energies.size(); ++i) {
    m = std::max(m, energies[i + 1] - energies[i]);
  }
  return m;
}

SpectralGrid build_grid(const DecaySpectrum& spectrum, const GridOptions& opt) {
  const double b = spectrum.model().b();
  auto eval = [&spectrum, b](double y) {
    const ShiftWidth sw = spectrum.self_energy(y);
    return Sample{sw.shift, sw.width, lorentz_form(y - b, sw)};
  };
  auto resonance = [&spectrum](double y) { return spectrum.resonance_function(y); };
  auto u = [&spectrum](double y) { return spectrum.spectral_function(y); };
  return GridBuilder(eval, resonance, u, b, opt).run();
}

SpectralGrid build_grid(const std::function<double(double)>& u, double center,
                        const GridOptions& opt) {
  auto eval = [&u](double y) { return Sample{0.0, 0.0, u(y)}; };
  return GridBuilder(eval, nullptr, u, center, opt).run();
}

}  // namespace transmon
