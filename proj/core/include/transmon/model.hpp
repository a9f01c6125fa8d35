#pragma once

// Emitter level structure and Gaussian mode densities, all in units of the
// continuum width delta.

#include <cmath>
#include <numbers>

namespace transmon {

inline constexpr double kSqrtPi = 1.772453850905516027298167483341145;

/// Angular frequencies in rad/s.
struct PhysicalParams {
  double level_e = 0.0;  ///< E_e
  double level_f = 0.0;  ///< E_f
  double width = 0.0;    ///< delta, width of the continuum coupling window
};

/// Transition index: `eg` is |e> -> |g> (index 1), `fe` is |f> -> |e> (index 2).
enum class Transition { eg = 1, fe = 2 };

class DimensionlessModel {
 public:
  /// a = E_e/delta, b = E_f/delta. Requires 0 < b - a < a and a >= 10.
  static DimensionlessModel from_levels(double a, double b);
  static DimensionlessModel from_physical(const PhysicalParams& p);
  /// Defaults used throughout: E_e = 2pi 5 GHz, E_f = 2pi 9.85 GHz, delta = 2pi 100 MHz.
  static DimensionlessModel transmon_default() { return from_levels(50.0, 98.5); }

  PhysicalParams to_physical(double width) const;

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  /// Anharmonicity (2E_e - E_f)/delta.
  double anharmonicity() const noexcept { return alpha_; }

  /// Gaussian center of P_i: a for eg, a - anharmonicity for fe.
  double center(Transition t) const noexcept { return t == Transition::eg ? a_ : a_ - alpha_; }

  /// P_i(w)·delta = (2/sqrt(pi)) exp(-(w - c_i)^2).
  double density(Transition t, double w) const noexcept {
    const double x = w - center(t);
    return 2.0 * std::numbers::inv_sqrtpi * std::exp(-x * x);
  }

  /// Below a = 20 the Gaussian tail at w = 0 is no longer negligible and the
  /// (0, inf) -> (-inf, inf) extension of the frequency integrals is approximate.
  bool extended_bound_reliable() const noexcept { return a_ >= 20.0; }

 private:
  DimensionlessModel(double a, double b) : a_(a), b_(b), alpha_(2.0 * a - b) {}

  double a_;
  double b_;
  double alpha_;
};

/// Coupling strengths L_i = Lambda_i/delta^2.
struct CouplingConfig {
  double l1 = 0.0;
  double l2 = 0.0;
  bool v1_enabled = false;

  /// L1 = (2/3) L2, i.e. g_2^2 = (3/2) g_1^2 for the transmon ladder.
  static CouplingConfig transmon(double l2, bool v1_enabled);
  static CouplingConfig make(double l1, double l2, bool v1_enabled);

  double strength(Transition t) const noexcept { return t == Transition::eg ? l1 : l2; }
};

/// g_i^2(w)/delta = L_i · P_i(w)·delta.
inline double coupling_sq(const DimensionlessModel& m, const CouplingConfig& c, Transition t,
                          double w) noexcept {
  return c.strength(t) * m.density(t, w);
}

}  // namespace transmon
