#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "transmon/decay_spectrum.hpp"
#include "transmon/resonance.hpp"
#include "transmon/spectral_grid.hpp"

namespace transmon::cli {

/// Malformed or inconsistent configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class UnitMode { dimensionless, physical };

/// Level frequencies in cyclic units, as quoted for hardware: E = 2pi * f.
struct PhysicalInput {
  double e_e_ghz = 5.0;
  double e_f_ghz = 9.85;
  double delta_mhz = 100.0;
};

struct TimeOptions {
  double t_max = 600.0;
  double dt = 0.05;
};

struct OracleOptions {
  std::vector<double> energies{-2.0, -1.0, 0.0, 0.5, 1.5};  ///< offsets from b
  std::vector<double> spacings{0.05, 0.02, 0.01, 0.005};
  bool symmetric_placement = true;
  double pole_offset_ratio = 2.0;  ///< epsilon / mode spacing
};

/// Fully resolved run configuration. Defaults: a = 50, b = 98.5, L2 = 6,
/// L1 = (2/3) L2 when V1 is on.
struct RunConfig {
  UnitMode mode = UnitMode::dimensionless;
  double a = 50.0;
  double b = 98.5;
  PhysicalInput physical{};
  double l2 = 6.0;
  std::optional<double> l1;  ///< unset: (2/3) L2 with V1 on, 0 otherwise
  bool v1_enabled = false;
  std::optional<Regime> regime;  ///< unset: stable or full from v1_enabled

  GridOptions grid{};
  QuadratureSettings quadrature{};
  RootOptions roots{};
  PeakOptions peaks{};
  SweepOptions sweep{};
  TimeOptions time{};
  OracleOptions oracle{};

  /// `section.key` / value pairs in the order they were applied.
  std::vector<std::pair<std::string, std::string>> assignments;

  DimensionlessModel model() const;
  CouplingConfig coupling() const;
  Regime resolved_regime() const;
  /// delta in rad/s; only meaningful in physical mode.
  double delta_rad_s() const;

  /// Every setting with defaults expanded.
  nlohmann::ordered_json to_json() const;
};

/// Parses `[section]` / `key = value` text; `#` and `;` start comments.
/// Unknown sections or keys, malformed values and mixed dimensionless/physical
/// parameter sets raise ConfigError.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Applies `section.key=value` overrides on top of an existing configuration.
/// Cross-field checks run once, after the last override.
void apply_overrides(RunConfig& cfg, const std::vector<std::string>& overrides);

}  // namespace transmon::cli
