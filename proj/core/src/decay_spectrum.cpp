#include "transmon/decay_spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "transmon/dawson.hpp"
#include "transmon/error.hpp"

namespace transmon {
namespace {

constexpr double kInvSqrtPi = std::numbers::inv_sqrtpi;

// Positive zero of s(u) = u - k D(u), k = 4 L1 > 1. s < 0 just right of the
// origin and s(k) = k (1 - D(k)) > 0.
double positive_zero(double k) {
  auto s = [k](double u) { return u - k * dawson(u); };
  double lo = 1e-8;
  double hi = k + 1.0;
  if (!(s(lo) < 0.0)) return 0.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (s(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::stable_second_level: return "stable";
    case Regime::weak_coupling: return "weak";
    case Regime::full_coupling: return "full";
  }
  return "unknown";
}

Regime parse_regime(std::string_view s) {
  if (s == "stable" || s == "stable_second_level") return Regime::stable_second_level;
  if (s == "weak" || s == "weak_coupling") return Regime::weak_coupling;
  if (s == "full" || s == "full_coupling") return Regime::full_coupling;
  throw InvalidArgument("unknown regime '" + std::string(s) + "'");
}

void check_regime(Regime r, const CouplingConfig& c) {
  const bool stable = r == Regime::stable_second_level;
  if (stable == c.v1_enabled) {
    throw InvalidArgument(stable ? "stable regime requires v1_enabled = false"
                                 : "weak/full regimes require v1_enabled = true");
  }
  if (!stable && !(c.l1 > 0.0)) {
    throw InvalidArgument("weak/full regimes require L1 > 0");
  }
}

double delta2_stable(double y, const DimensionlessModel& m, const CouplingConfig& c) {
  return 4.0 * c.l2 * dawson(y - m.b());
}

double gamma2_stable(double y, const DimensionlessModel& m, const CouplingConfig& c) {
  const double x = y - m.b();
  return 4.0 * kSqrtPi * c.l2 * std::exp(-x * x);
}

FullSelfEnergy::FullSelfEnergy(const DimensionlessModel& m, const CouplingConfig& c,
                               const QuadratureSettings& s)
    : model_(m), coupling_(c), settings_(s) {
  settings_.validate();
  const double k = 4.0 * c.l1;
  if (k > 1.0) {
    const double u = positive_zero(k);
    if (u > 0.0) zeros_ = {-u, 0.0, u};
  }
  if (zeros_.empty()) zeros_ = {0.0};
}

double FullSelfEnergy::delta2(double y) const {
  const double x = y - model_.b();
  const double k = 4.0 * coupling_.l1;
  const double g = 4.0 * kSqrtPi * coupling_.l1;
  auto integrand = [&](double u) {
    const double s = u - k * dawson(u);
    const double half_width = 0.5 * g * std::exp(-u * u);
    const double d = x - u;
    return std::exp(-d * d) * s / (s * s + half_width * half_width);
  };
  const auto r = integrate_adaptive(integrand, Domain::real_line(x), settings_, zeros_);
  return 2.0 * coupling_.l2 * kInvSqrtPi * r.value;
}

double FullSelfEnergy::gamma2(double y) const {
  const double x = y - model_.b();
  const double k = 4.0 * coupling_.l1;
  const double g = 4.0 * kSqrtPi * coupling_.l1;
  auto integrand = [&](double u) {
    const double s = u - k * dawson(u);
    const double gauss = std::exp(-u * u);
    const double half_width = 0.5 * g * gauss;
    const double d = x - u;
    return std::exp(-d * d) * gauss / (s * s + half_width * half_width);
  };
  const auto r = integrate_adaptive(integrand, Domain::real_line(0.5 * x), settings_, zeros_);
  return 8.0 * coupling_.l1 * coupling_.l2 * r.value;
}

double delta2_full(double y, const DimensionlessModel& m, const CouplingConfig& c,
                   const QuadratureSettings& s) {
  return FullSelfEnergy(m, c, s).delta2(y);
}

double gamma2_full(double y, const DimensionlessModel& m, const CouplingConfig& c,
                   const QuadratureSettings& s) {
  return FullSelfEnergy(m, c, s).gamma2(y);
}

ShiftWidth shift_width_weak(const DimensionlessModel& m, const CouplingConfig& c,
                            const QuadratureSettings& s) {
  return FullSelfEnergy(m, c, s).at(m.b());
}

double lorentz_form(double detuning, ShiftWidth sw) {
  const double f = detuning - sw.shift;
  if (sw.width == 0.0) {
    if (f == 0.0) throw DegeneratePoint(detuning);
    return 0.0;
  }
  return 0.5 * std::numbers::inv_pi * sw.width / (f * f + 0.25 * sw.width * sw.width);
}

DecaySpectrum::DecaySpectrum(const DimensionlessModel& m, const CouplingConfig& c, Regime r,
                             const QuadratureSettings& s)
    : model_(m), coupling_(c), regime_(r), settings_(s), full_(m, c, s) {
  check_regime(r, c);
  if (r == Regime::weak_coupling) frozen_ = full_.at(m.b());
}

ShiftWidth DecaySpectrum::self_energy(double y) const {
  switch (regime_) {
    case Regime::stable_second_level:
      return {delta2_stable(y, model_, coupling_), gamma2_stable(y, model_, coupling_)};
    case Regime::weak_coupling: return frozen_;
    case Regime::full_coupling: return full_.at(y);
  }
  return {};
}

double DecaySpectrum::shift(double y) const {
  switch (regime_) {
    case Regime::stable_second_level: return delta2_stable(y, model_, coupling_);
    case Regime::weak_coupling: return frozen_.shift;
    case Regime::full_coupling: return full_.delta2(y);
  }
  return 0.0;
}

double DecaySpectrum::spectral_function(double y) const {
  return lorentz_form(y - model_.b(), self_energy(y));
}

double spectral_function(double y, const DimensionlessModel& m, const CouplingConfig& c,
                         Regime r, const QuadratureSettings& s) {
  return DecaySpectrum(m, c, r, s).spectral_function(y);
}

}  // namespace transmon
