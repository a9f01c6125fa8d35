#pragma once

#include <functional>
#include <limits>
#include <span>

namespace transmon {

using Integrand = std::function<double(double)>;

struct QuadratureSettings {
  double abs_tol = 1e-11;
  double rel_tol = 1e-10;
  /// Infinite endpoints are replaced by center +- tail_cutoff * scale (see Domain).
  double tail_cutoff = 10.0;
  int max_subdivisions = 2000;

  /// Throws InvalidArgument unless abs_tol, rel_tol > 0, tail_cutoff >= 8 and
  /// max_subdivisions >= 50.
  void validate() const;
};

/// Integration interval. Infinite ends are truncated at `center -+ tail_cutoff * scale`,
/// where center/scale describe the Gaussian envelope of the integrand.
struct Domain {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  double center = 0.0;
  double scale = 1.0;

  static Domain finite(double lo, double hi) { return {lo, hi, 0.5 * (lo + hi), 1.0}; }
  static Domain real_line(double center = 0.0, double scale = 1.0) {
    return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
            center, scale};
  }
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
};

/// Globally adaptive 21-point Gauss-Kronrod quadrature. `breakpoints` that fall
/// inside the (truncated) domain split the initial partition, which is how
/// callers hand over known narrow features. Throws ConvergenceError when the
/// subdivision budget runs out before max(abs_tol, rel_tol*|I|) is reached.
QuadratureResult integrate_adaptive(const Integrand& f, Domain domain,
                                    const QuadratureSettings& s,
                                    std::span<const double> breakpoints = {});

/// Principal value of int f over `domain`, where f carries a simple pole
/// r/(pole - t). The symmetric window [pole - h, pole + h] is folded onto
/// t -> f(pole + t) + f(pole - t), which is regular, and the remainder is
/// integrated adaptively.
QuadratureResult pv_integrate(const Integrand& f, double pole, Domain domain,
                              const QuadratureSettings& s,
                              std::span<const double> breakpoints = {});

}  // namespace transmon
