#pragma once

#include <string_view>
#include <vector>

#include "transmon/model.hpp"
#include "transmon/quadrature.hpp"
#include "transmon/self_energy.hpp"

namespace transmon {

enum class Regime {
  stable_second_level,  ///< V1 = 0: |e> stable, two-level decay of |f>
  weak_coupling,        ///< V1 != 0, shift and width frozen at E = E_f
  full_coupling,        ///< V1 != 0, full energy dependence
};

std::string_view to_string(Regime r) noexcept;
/// Accepts "stable", "weak", "full" and the enumerator names.
Regime parse_regime(std::string_view s);

/// Throws InvalidArgument if `r` is inconsistent with c.v1_enabled.
void check_regime(Regime r, const CouplingConfig& c);

/// Delta_2(y) = 4 L2 D(y - b) for a stable second level.
double delta2_stable(double y, const DimensionlessModel& m, const CouplingConfig& c);
/// Gamma_2(y) = 4 sqrt(pi) L2 exp(-(y - b)^2) for a stable second level.
double gamma2_stable(double y, const DimensionlessModel& m, const CouplingConfig& c);

/// Second-level self-energy with the e<->g coupling on.
///
/// Both Delta_2 and Gamma_2 are integrals over the emitted photon frequency w.
/// With u = y - a - w the Delta_1/Gamma_1 denominators depend on u alone:
///
///   s(u) = u - 4 L1 D(u),  Gamma_1(u) = 4 sqrt(pi) L1 exp(-u^2)
///
/// and the g_2^2 Gaussian becomes exp(-(x - u)^2) with x = y - b. The zeros of
/// s(u) (u = 0, plus +-u* once 4 L1 > 1) are where the integrand is sharply
/// peaked; they are computed once and passed to the quadrature as breakpoints.
class FullSelfEnergy {
 public:
  FullSelfEnergy(const DimensionlessModel& m, const CouplingConfig& c,
                 const QuadratureSettings& s);

  double delta2(double y) const;
  double gamma2(double y) const;
  ShiftWidth at(double y) const { return {delta2(y), gamma2(y)}; }

  /// Zeros of s(u), ascending.
  const std::vector<double>& denominator_zeros() const noexcept { return zeros_; }

 private:
  DimensionlessModel model_;
  CouplingConfig coupling_;
  QuadratureSettings settings_;
  std::vector<double> zeros_;
};

double delta2_full(double y, const DimensionlessModel& m, const CouplingConfig& c,
                   const QuadratureSettings& s);
double gamma2_full(double y, const DimensionlessModel& m, const CouplingConfig& c,
                   const QuadratureSettings& s);

/// (Delta_2(E_f), Gamma_2(E_f)) from the full integrals.
ShiftWidth shift_width_weak(const DimensionlessModel& m, const CouplingConfig& c,
                            const QuadratureSettings& s);

/// U_ff(y)·delta = (1/2pi) G / ((y - b - D)^2 + G^2/4).
/// Throws DegeneratePoint when G == 0 and y - b - D == 0.
double lorentz_form(double detuning, ShiftWidth sw);

/// Regime-dispatching evaluator of Delta_2, Gamma_2 and U_ff. Cheap to copy.
class DecaySpectrum {
 public:
  DecaySpectrum(const DimensionlessModel& m, const CouplingConfig& c, Regime r,
                const QuadratureSettings& s);

  ShiftWidth self_energy(double y) const;
  double shift(double y) const;
  double spectral_function(double y) const;
  /// y - b - Delta_2(y); its zeros are the resonance points.
  double resonance_function(double y) const { return y - model_.b() - shift(y); }

  const DimensionlessModel& model() const noexcept { return model_; }
  const CouplingConfig& coupling() const noexcept { return coupling_; }
  Regime regime() const noexcept { return regime_; }
  const QuadratureSettings& settings() const noexcept { return settings_; }

 private:
  DimensionlessModel model_;
  CouplingConfig coupling_;
  Regime regime_;
  QuadratureSettings settings_;
  FullSelfEnergy full_;
  ShiftWidth frozen_{};  // weak_coupling only
};

double spectral_function(double y, const DimensionlessModel& m, const CouplingConfig& c,
                         Regime r, const QuadratureSettings& s);

}  // namespace transmon
