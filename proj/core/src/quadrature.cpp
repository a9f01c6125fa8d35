#include "transmon/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "transmon/error.hpp"

namespace transmon {
namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525370700, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment kronrod21(const Integrand& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double resk = fc * kWgk[10];
  double resg = 0.0;
  double resabs = std::fabs(resk);
  double fv1[10];
  double fv2[10];
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv1[j] = f1;
    fv2[j] = f2;
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[10] * std::fabs(fc - reskh);
  for (int j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
  }
  const double result = resk * half;
  resabs *= std::fabs(half);
  resasc *= std::fabs(half);
  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * resabs, err);
  }
  if (!std::isfinite(result)) {
    throw NumericalError("integrand is not finite on [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
  }
  return {lo, hi, result, err};
}

struct Bounds {
  double lo;
  double hi;
};

Bounds truncate(const Domain& d, const QuadratureSettings& s) {
  const double reach = s.tail_cutoff * d.scale;
  return {std::isinf(d.lo) ? d.center - reach : d.lo, std::isinf(d.hi) ? d.center + reach : d.hi};
}

QuadratureResult adapt(const Integrand& f, std::vector<double> cuts, const QuadratureSettings& s) {
  std::priority_queue<Segment> queue;
  double total = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] <= cuts[i]) continue;
    Segment seg = kronrod21(f, cuts[i], cuts[i + 1]);
    total += seg.value;
    error += seg.error;
    queue.push(seg);
  }
  int subdivisions = static_cast<int>(queue.size());
  constexpr double eps = std::numeric_limits<double>::epsilon();
  while (error > std::max(s.abs_tol, s.rel_tol * std::fabs(total))) {
    if (subdivisions >= s.max_subdivisions) {
      throw ConvergenceError("adaptive quadrature did not converge within " +
                                 std::to_string(s.max_subdivisions) +
                                 " subdivisions (error estimate " + std::to_string(error) + ")",
                             total, error);
    }
    Segment worst = queue.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    // Interval at the resolution limit of double: accept its contribution as is.
    if (worst.hi - worst.lo <= 100.0 * eps * std::max(std::fabs(worst.lo), std::fabs(worst.hi))) {
      break;
    }
    queue.pop();
    const Segment left = kronrod21(f, worst.lo, mid);
    const Segment right = kronrod21(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++subdivisions;
  }
  // Re-sum to shed the drift accumulated by incremental updates.
  double value = 0.0;
  double err = 0.0;
  while (!queue.empty()) {
    value += queue.top().value;
    err += queue.top().error;
    queue.pop();
  }
  return {value, err, subdivisions};
}

std::vector<double> split_at(double lo, double hi, std::span<const double> breakpoints) {
  std::vector<double> cuts{lo};
  for (double p : breakpoints) {
    if (p > lo && p < hi) cuts.push_back(p);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

}  // namespace

void QuadratureSettings::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw InvalidArgument("quadrature tolerances must be positive");
  }
  if (!(tail_cutoff >= 8.0)) throw InvalidArgument("tail_cutoff must be at least 8");
  if (max_subdivisions < 50) throw InvalidArgument("max_subdivisions must be at least 50");
}

QuadratureResult integrate_adaptive(const Integrand& f, Domain domain,
                                    const QuadratureSettings& s,
                                    std::span<const double> breakpoints) {
  const auto [lo, hi] = truncate(domain, s);
  if (!(hi >= lo)) throw InvalidArgument("integration domain has hi < lo");
  if (hi == lo) return {};
  return adapt(f, split_at(lo, hi, breakpoints), s);
}

QuadratureResult pv_integrate(const Integrand& f, double pole, Domain domain,
                              const QuadratureSettings& s, std::span<const double> breakpoints) {
  // Keep the pole well inside the truncated window, otherwise the folded part
  // would shrink to nothing.
  const double margin = domain.scale;
  if (std::isinf(domain.lo)) domain.lo = std::min(domain.center - s.tail_cutoff * domain.scale,
                                                  pole - margin);
  if (std::isinf(domain.hi)) domain.hi = std::max(domain.center + s.tail_cutoff * domain.scale,
                                                  pole + margin);
  const double lo = domain.lo;
  const double hi = domain.hi;
  if (!(pole > lo && pole < hi)) {
    throw InvalidArgument("pv_integrate: pole " + std::to_string(pole) +
                          " is not inside the integration domain");
  }
  const double h = std::min({pole - lo, hi - pole, margin});

  // Breakpoints inside the folded window map to |p - pole|.
  std::vector<double> folded_breaks;
  for (double p : breakpoints) {
    const double d = std::fabs(p - pole);
    if (d > 0.0 && d < h) folded_breaks.push_back(d);
  }
  auto folded = [&](double t) { return f(pole + t) + f(pole - t); };
  QuadratureResult core = adapt(folded, split_at(0.0, h, folded_breaks), s);

  QuadratureResult out = core;
  if (pole - h > lo) {
    const auto left = adapt(f, split_at(lo, pole - h, breakpoints), s);
    out.value += left.value;
    out.error += left.error;
    out.subdivisions += left.subdivisions;
  }
  if (pole + h < hi) {
    const auto right = adapt(f, split_at(pole + h, hi, breakpoints), s);
    out.value += right.value;
    out.error += right.error;
    out.subdivisions += right.subdivisions;
  }
  return out;
}

}  // namespace transmon
