#pragma once

// Self-energy of the |e> <-> |g> transition, entering the denominators of the
// second-level shift and width.

#include "transmon/model.hpp"
#include "transmon/quadrature.hpp"

namespace transmon {

/// Real shift and decay width of a self-energy at one energy, both in units of delta.
struct ShiftWidth {
  double shift = 0.0;
  double width = 0.0;
};

/// Lower limit of the frequency integrals. The Gaussian densities make the
/// difference negligible for a >> 1; `half_line` keeps the exact (0, inf) form.
enum class LowerBound { extended, half_line };

/// Delta_1(y, w) = 4 L1 D(y - w - a). Zero when V1 is disabled.
double delta1(double y, double w, const DimensionlessModel& m, const CouplingConfig& c);

/// Gamma_1(y, w) = 4 sqrt(pi) L1 exp(-(y - w - a)^2) = 2 pi g_1^2(y - w). Zero when V1 is disabled.
double gamma1(double y, double w, const DimensionlessModel& m, const CouplingConfig& c);

ShiftWidth self_energy_1(double y, double w, const DimensionlessModel& m,
                         const CouplingConfig& c);

/// Same quantities with an explicit lower bound; `half_line` evaluates the
/// shift by principal-value quadrature over (0, inf).
ShiftWidth self_energy_1(double y, double w, const DimensionlessModel& m,
                         const CouplingConfig& c, LowerBound bound,
                         const QuadratureSettings& s);

}  // namespace transmon
