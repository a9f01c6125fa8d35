#include "transmon/self_energy.hpp"

#include <cmath>
#include <numbers>

#include "transmon/dawson.hpp"

namespace transmon {

double delta1(double y, double w, const DimensionlessModel& m, const CouplingConfig& c) {
  if (!c.v1_enabled) return 0.0;
  return 4.0 * c.l1 * dawson(y - w - m.a());
}

double gamma1(double y, double w, const DimensionlessModel& m, const CouplingConfig& c) {
  if (!c.v1_enabled) return 0.0;
  const double u = y - w - m.a();
  return 4.0 * kSqrtPi * c.l1 * std::exp(-u * u);
}

ShiftWidth self_energy_1(double y, double w, const DimensionlessModel& m,
                         const CouplingConfig& c) {
  return {delta1(y, w, m, c), gamma1(y, w, m, c)};
}

ShiftWidth self_energy_1(double y, double w, const DimensionlessModel& m,
                         const CouplingConfig& c, LowerBound bound,
                         const QuadratureSettings& s) {
  if (bound == LowerBound::extended || !c.v1_enabled) return self_energy_1(y, w, m, c);

  // (2 L1/sqrt(pi)) PV int_0^inf exp(-(w' - a)^2) / (y - w - w') dw'
  const double pole = y - w;
  auto g1sq = [&](double wp) { return coupling_sq(m, c, Transition::eg, wp); };
  auto integrand = [&](double wp) { return g1sq(wp) / (pole - wp); };
  const Domain domain{0.0, std::numeric_limits<double>::infinity(), m.a(), 1.0};
  double shift = 0.0;
  if (pole > 0.0) {
    shift = pv_integrate(integrand, pole, domain, s).value;
  } else {
    shift = integrate_adaptive(integrand, domain, s).value;
  }
  const double width = pole > 0.0 ? 2.0 * std::numbers::pi * g1sq(pole) : 0.0;
  return {shift, width};
}

}  // namespace transmon
