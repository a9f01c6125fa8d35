#include "transmon_cli/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include "transmon/error.hpp"

namespace transmon::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size() || !std::isfinite(d)) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "' expects a number, got '" + v + "'");
  }
}

int to_int(const std::string& key, const std::string& v) {
  const double d = to_double(key, v);
  if (d != std::floor(d) || std::fabs(d) > 1e9) {
    throw ConfigError("key '" + key + "' expects an integer, got '" + v + "'");
  }
  return static_cast<int>(d);
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("key '" + key + "' expects a boolean, got '" + v + "'");
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(key, trim(item)));
  if (out.empty()) throw ConfigError("key '" + key + "' expects a comma-separated list");
  return out;
}

// Tracks which parameter family the file used, to reject mixtures.
struct Seen {
  bool dimensionless = false;
  bool physical = false;
  std::optional<UnitMode> explicit_mode;
  std::optional<double> alpha_d;
  bool b_given = false;
};

using Setter = std::function<void(RunConfig&, Seen&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"run.mode",
       [](RunConfig&, Seen& s, const std::string& k, const std::string& v) {
         if (v == "dimensionless") s.explicit_mode = UnitMode::dimensionless;
         else if (v == "physical") s.explicit_mode = UnitMode::physical;
         else throw ConfigError("key '" + k + "' expects dimensionless|physical, got '" + v + "'");
       }},
      {"model.a", [](RunConfig& c, Seen& s, const std::string& k, const std::string& v) {
         c.a = to_double(k, v);
         s.dimensionless = true;
       }},
      {"model.b", [](RunConfig& c, Seen& s, const std::string& k, const std::string& v) {
         c.b = to_double(k, v);
         s.dimensionless = true;
         s.b_given = true;
       }},
      {"model.alpha_d", [](RunConfig&, Seen& s, const std::string& k, const std::string& v) {
         s.alpha_d = to_double(k, v);
         s.dimensionless = true;
       }},
      {"physical.e_e_ghz", [](RunConfig& c, Seen& s, const std::string& k, const std::string& v) {
         c.physical.e_e_ghz = to_double(k, v);
         s.physical = true;
       }},
      {"physical.e_f_ghz", [](RunConfig& c, Seen& s, const std::string& k, const std::string& v) {
         c.physical.e_f_ghz = to_double(k, v);
         s.physical = true;
       }},
      {"physical.delta_mhz", [](RunConfig& c, Seen& s, const std::string& k, const std::string& v) {
         c.physical.delta_mhz = to_double(k, v);
         s.physical = true;
       }},
      {"coupling.l2", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.l2 = to_double(k, v);
       }},
      {"coupling.l1", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.l1 = to_double(k, v);
       }},
      {"coupling.v1_enabled", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.v1_enabled = to_bool(k, v);
       }},
      {"coupling.regime", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         try {
           c.regime = parse_regime(v);
         } catch (const InvalidArgument&) {
           throw ConfigError("key '" + k + "' expects stable|weak|full, got '" + v + "'");
         }
       }},
      {"grid.lo", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.grid.lo = to_double(k, v);
       }},
      {"grid.hi", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.grid.hi = to_double(k, v);
       }},
      {"grid.step", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.grid.coarse_step = to_double(k, v);
       }},
      {"grid.points_per_fwhm", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.grid.points_per_fwhm = to_int(k, v);
       }},
      {"grid.min_step", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.grid.min_step = to_double(k, v);
       }},
      {"grid.max_passes", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.grid.max_passes = to_int(k, v);
       }},
      {"quadrature.abs_tol", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.quadrature.abs_tol = to_double(k, v);
       }},
      {"quadrature.rel_tol", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.quadrature.rel_tol = to_double(k, v);
       }},
      {"quadrature.tail_cutoff", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.quadrature.tail_cutoff = to_double(k, v);
       }},
      {"quadrature.max_subdivisions",
       [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.quadrature.max_subdivisions = to_int(k, v);
       }},
      {"resonances.scan_lo", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.roots.lo = to_double(k, v);
       }},
      {"resonances.scan_hi", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.roots.hi = to_double(k, v);
       }},
      {"resonances.scan_step", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.roots.step = to_double(k, v);
       }},
      {"resonances.root_tolerance",
       [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.roots.tolerance = to_double(k, v);
       }},
      {"resonances.min_relative_height",
       [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.peaks.min_relative_height = to_double(k, v);
       }},
      {"sweep.l2_min", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.sweep.l2_min = to_double(k, v);
       }},
      {"sweep.l2_max", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.sweep.l2_max = to_double(k, v);
       }},
      {"sweep.steps", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.sweep.steps = to_int(k, v);
       }},
      {"sweep.crossover_tolerance",
       [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.sweep.crossover_tolerance = to_double(k, v);
       }},
      {"time.t_max", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.time.t_max = to_double(k, v);
       }},
      {"time.dt", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.time.dt = to_double(k, v);
       }},
      {"oracle.energies", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.oracle.energies = to_list(k, v);
       }},
      {"oracle.spacings", [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.oracle.spacings = to_list(k, v);
       }},
      {"oracle.symmetric_placement",
       [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.oracle.symmetric_placement = to_bool(k, v);
       }},
      {"oracle.pole_offset_ratio",
       [](RunConfig& c, Seen&, const std::string& k, const std::string& v) {
         c.oracle.pole_offset_ratio = to_double(k, v);
       }},
  };
  return table;
}

void assign(RunConfig& cfg, Seen& seen, const std::string& key, const std::string& value) {
  const auto& table = setters();
  const auto it = table.find(key);
  if (it == table.end()) throw ConfigError("unknown key '" + key + "'");
  it->second(cfg, seen, key, value);
}

void finish(RunConfig& cfg, Seen& seen) {
  if (seen.dimensionless && seen.physical) {
    throw ConfigError("both [model] and [physical] parameters given; use exactly one set");
  }
  if (seen.explicit_mode) {
    cfg.mode = *seen.explicit_mode;
    if (cfg.mode == UnitMode::physical && seen.dimensionless) {
      throw ConfigError("run.mode = physical but [model] parameters were given");
    }
    if (cfg.mode == UnitMode::dimensionless && seen.physical) {
      throw ConfigError("run.mode = dimensionless but [physical] parameters were given");
    }
  } else if (seen.physical) {
    cfg.mode = UnitMode::physical;
  }
  if (seen.alpha_d) {
    if (seen.b_given) {
      if (std::fabs(2.0 * cfg.a - cfg.b - *seen.alpha_d) > 1e-9 * cfg.b) {
        throw ConfigError("model.alpha_d is inconsistent with b = 2a - alpha_d");
      }
    } else {
      cfg.b = 2.0 * cfg.a - *seen.alpha_d;
    }
  }
  if (cfg.mode == UnitMode::physical) {
    const auto& p = cfg.physical;
    if (!(p.delta_mhz > 0.0)) throw ConfigError("physical.delta_mhz must be positive");
    cfg.a = p.e_e_ghz * 1e3 / p.delta_mhz;
    cfg.b = p.e_f_ghz * 1e3 / p.delta_mhz;
  }
  // Surface model/coupling/regime problems as configuration errors.
  try {
    (void)cfg.model();
    const auto c = cfg.coupling();
    check_regime(cfg.resolved_regime(), c);
    cfg.quadrature.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

DimensionlessModel RunConfig::model() const {
  // Physical inputs are reduced to a, b by plain ratios, so 5 GHz / 100 MHz
  // stays exactly 50 instead of picking up 2 pi round-off.
  return DimensionlessModel::from_levels(a, b);
}

CouplingConfig RunConfig::coupling() const {
  if (l1) return CouplingConfig::make(*l1, l2, v1_enabled);
  return CouplingConfig::transmon(l2, v1_enabled);
}

Regime RunConfig::resolved_regime() const {
  if (regime) return *regime;
  return v1_enabled ? Regime::full_coupling : Regime::stable_second_level;
}

double RunConfig::delta_rad_s() const { return 2.0 * std::numbers::pi * physical.delta_mhz * 1e6; }

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  const auto m = model();
  const auto c = coupling();
  j["run"]["mode"] = mode == UnitMode::physical ? "physical" : "dimensionless";
  j["model"] = {{"a", m.a()}, {"b", m.b()}, {"alpha_d", m.anharmonicity()}};
  if (mode == UnitMode::physical) {
    j["physical"] = {{"e_e_ghz", physical.e_e_ghz},
                     {"e_f_ghz", physical.e_f_ghz},
                     {"delta_mhz", physical.delta_mhz}};
  }
  j["coupling"] = {{"l1", c.l1},
                   {"l2", c.l2},
                   {"v1_enabled", c.v1_enabled},
                   {"regime", std::string(to_string(resolved_regime()))}};
  j["grid"] = {{"lo", grid.lo},
               {"hi", grid.hi},
               {"step", grid.coarse_step},
               {"points_per_fwhm", grid.points_per_fwhm},
               {"min_step", grid.min_step},
               {"max_passes", grid.max_passes}};
  j["quadrature"] = {{"abs_tol", quadrature.abs_tol},
                     {"rel_tol", quadrature.rel_tol},
                     {"tail_cutoff", quadrature.tail_cutoff},
                     {"max_subdivisions", quadrature.max_subdivisions}};
  j["resonances"] = {{"scan_lo", roots.lo},
                     {"scan_hi", roots.hi},
                     {"scan_step", roots.step},
                     {"root_tolerance", roots.tolerance},
                     {"min_relative_height", peaks.min_relative_height}};
  j["sweep"] = {{"l2_min", sweep.l2_min},
                {"l2_max", sweep.l2_max},
                {"steps", sweep.steps},
                {"crossover_tolerance", sweep.crossover_tolerance}};
  j["time"] = {{"t_max", time.t_max}, {"dt", time.dt}};
  j["oracle"] = {{"energies", oracle.energies},
                 {"spacings", oracle.spacings},
                 {"symmetric_placement", oracle.symmetric_placement},
                 {"pole_offset_ratio", oracle.pole_offset_ratio}};
  return j;
}

namespace {

RunConfig build(const std::vector<std::pair<std::string, std::string>>& assignments) {
  RunConfig cfg;
  Seen seen;
  for (const auto& [key, value] : assignments) assign(cfg, seen, key, value);
  finish(cfg, seen);
  cfg.assignments = assignments;
  return cfg;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> assignments;
  std::stringstream in(text);
  std::string line;
  std::string section;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("line " + std::to_string(number) + ": malformed section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(number) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (section.empty()) {
      throw ConfigError("line " + std::to_string(number) + ": key '" + key +
                        "' outside of a section");
    }
    assignments.emplace_back(section + "." + key, trim(line.substr(eq + 1)));
  }
  return build(assignments);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void apply_overrides(RunConfig& cfg, const std::vector<std::string>& overrides) {
  auto assignments = cfg.assignments;
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw ConfigError("override '" + o + "' lacks '='");
    assignments.emplace_back(trim(o.substr(0, eq)), trim(o.substr(eq + 1)));
  }
  cfg = build(assignments);
}

}  // namespace transmon::cli
