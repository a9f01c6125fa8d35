#include "transmon/model.hpp"

#include <cmath>
#include <string>

#include "transmon/error.hpp"

namespace transmon {

DimensionlessModel DimensionlessModel::from_levels(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidArgument("level energies must be finite");
  }
  if (!(a > 0.0 && b > a)) {
    throw InvalidArgument("level ordering requires E_f > E_e > 0");
  }
  if (!(2.0 * a - b > 0.0)) {
    throw InvalidArgument("anharmonicity 2E_e - E_f must be positive (got " +
                          std::to_string((2.0 * a - b)) + " in units of delta)");
  }
  if (a < 10.0) {
    throw InvalidArgument("E_e/delta = " + std::to_string(a) +
                          " is below 10; the Gaussian continuum model needs E_e >> delta");
  }
  return DimensionlessModel(a, b);
}

DimensionlessModel DimensionlessModel::from_physical(const PhysicalParams& p) {
  if (!(p.width > 0.0) || !std::isfinite(p.width)) {
    throw InvalidArgument("continuum width delta must be positive");
  }
  return from_levels(p.level_e / p.width, p.level_f / p.width);
}

PhysicalParams DimensionlessModel::to_physical(double width) const {
  return {a_ * width, b_ * width, width};
}

CouplingConfig CouplingConfig::transmon(double l2, bool v1_enabled) {
  return make(v1_enabled ? 2.0 * l2 / 3.0 : 0.0, l2, v1_enabled);
}

CouplingConfig CouplingConfig::make(double l1, double l2, bool v1_enabled) {
  if (!(l1 >= 0.0) || !(l2 >= 0.0) || !std::isfinite(l1) || !std::isfinite(l2)) {
    throw InvalidArgument("coupling strengths L1, L2 must be finite and non-negative");
  }
  return {l1, l2, v1_enabled};
}

}  // namespace transmon
