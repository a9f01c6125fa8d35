#include "transmon_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "transmon/dawson.hpp"
#include "transmon/decay_spectrum.hpp"
#include "transmon/discrete_oracle.hpp"
#include "transmon/error.hpp"
#include "transmon/resonance.hpp"
#include "transmon/spectral_grid.hpp"
#include "transmon/time_domain.hpp"

namespace transmon::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

DecaySpectrum make_spectrum(const RunConfig& cfg) {
  return DecaySpectrum(cfg.model(), cfg.coupling(), cfg.resolved_regime(), cfg.quadrature);
}

bool physical(const RunConfig& cfg) { return cfg.mode == UnitMode::physical; }

// Angular and cyclic forms of a dimensionless energy.
json frequency(double y, const RunConfig& cfg) {
  const double w = y * cfg.delta_rad_s();
  return {{"rad_s", w}, {"hz", w / kTwoPi}};
}

json record_json(const ResonanceRecord& r, const RunConfig& cfg) {
  json j;
  j["y_r"] = r.y_r;
  j["y_minus_b"] = r.y_r - cfg.model().b();
  j["kind"] = std::string(to_string(r.kind));
  j["height"] = r.height;
  j["fwhm"] = r.fwhm ? json(*r.fwhm) : json(nullptr);
  if (r.kind == ResonanceKind::root) j["degenerate"] = r.degenerate;
  if (r.kind == ResonanceKind::peak) {
    j["overlapped"] = r.overlapped;
    j["paired_root"] = r.paired_root ? json(*r.paired_root) : json(nullptr);
  }
  if (physical(cfg)) {
    j["physical_frequency"] = frequency(r.y_r, cfg);
    if (r.fwhm) j["physical_fwhm"] = frequency(*r.fwhm, cfg);
    j["height_s"] = r.height / cfg.delta_rad_s();
  }
  return j;
}

// Half the splitting between the outermost peaks, quoted both as an angular
// frequency and as its cyclic value (the "2 pi x f" convention).
json rabi_json(const std::vector<ResonanceRecord>& peaks, const RunConfig& cfg) {
  const double omega = 0.5 * (peaks.back().y_r - peaks.front().y_r);
  json j;
  j["angular_frequency"] = omega;
  j["frequency"] = omega / kTwoPi;
  j["period"] = kTwoPi / omega;
  if (physical(cfg)) {
    const double w = omega * cfg.delta_rad_s();
    j["angular_frequency_rad_s"] = w;
    j["frequency_hz"] = w / kTwoPi;
    j["period_s"] = kTwoPi / w;
  }
  return j;
}

// Decay time 1/FWHM of the lowest-energy peak.
std::optional<double> fwhm_decay_time(const std::vector<ResonanceRecord>& peaks) {
  if (peaks.empty() || !peaks.front().fwhm || !(*peaks.front().fwhm > 0.0)) return std::nullopt;
  return 1.0 / *peaks.front().fwhm;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

CommandResult run_spectrum(const RunConfig& cfg) {
  const auto spectrum = make_spectrum(cfg);
  const auto grid = build_grid(spectrum, cfg.grid);
  const double b = cfg.model().b();

  Table t;
  t.header = {"y", "y_minus_b", "gamma2", "delta2", "u_ff"};
  if (physical(cfg)) {
    for (const char* h : {"omega_rad_s", "frequency_hz", "gamma2_rad_s", "delta2_rad_s", "u_ff_s"}) {
      t.header.emplace_back(h);
    }
  }
  const double d = cfg.delta_rad_s();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double y = grid.energies[i];
    std::vector<Cell> row{y, y - b, grid.gamma2[i], grid.delta2[i], grid.u_ff[i]};
    if (physical(cfg)) {
      row.insert(row.end(), {y * d, y * d / kTwoPi, grid.gamma2[i] * d, grid.delta2[i] * d,
                             grid.u_ff[i] / d});
    }
    t.rows.push_back(std::move(row));
  }

  CommandResult r;
  r.command = "spectrum";
  r.table = std::move(t);
  r.report["grid"] = {{"points", grid.size()},
                      {"integral", grid.integral()},
                      {"max_step", grid.max_step()},
                      {"complete", grid.complete}};
  return r;
}

CommandResult run_resonances(const RunConfig& cfg) {
  const auto spectrum = make_spectrum(cfg);
  const auto rep = analyze(spectrum, cfg.grid, cfg.roots, cfg.peaks);

  Table t;
  t.header = {"kind", "y_r", "y_minus_b", "height", "fwhm"};
  const double b = cfg.model().b();
  auto add = [&](const ResonanceRecord& rec) {
    t.rows.push_back({std::string(to_string(rec.kind)), rec.y_r, rec.y_r - b, rec.height,
                      rec.fwhm ? *rec.fwhm : std::nan("")});
  };

  CommandResult r;
  r.command = "resonances";
  json roots = json::array();
  for (const auto& rec : rep.roots) {
    roots.push_back(record_json(rec, cfg));
    add(rec);
  }
  json peaks = json::array();
  for (const auto& rec : rep.peaks) {
    peaks.push_back(record_json(rec, cfg));
    add(rec);
  }
  r.report["roots"] = std::move(roots);
  r.report["peaks"] = std::move(peaks);
  if (cfg.resolved_regime() == Regime::stable_second_level) {
    // Closed-form side offset from x = 4 L2 D(x).
    r.report["stable_side_offset"] =
        optional_number(dawson_fixed_point(4.0 * cfg.coupling().l2));
  }
  r.report["rabi"] = rep.peaks.size() >= 2 ? rabi_json(rep.peaks, cfg) : json(nullptr);
  r.report["fwhm_decay_time"] = optional_number(fwhm_decay_time(rep.peaks));
  r.report["grid_complete"] = rep.grid.complete;
  r.table = std::move(t);
  return r;
}

CommandResult run_sweep(const RunConfig& cfg) {
  SweepOptions opt = cfg.sweep;
  opt.roots = cfg.roots;
  const auto result = sweep_coupling(cfg.model(), cfg.resolved_regime(), opt, cfg.quadrature);

  Table t;
  t.header = {"l2", "y_r", "u_at_yr", "kind"};
  for (const auto& p : result.points) {
    for (const auto& rec : p.roots) {
      t.rows.push_back({p.l2, rec.y_r, rec.height, std::string(to_string(rec.kind))});
    }
  }
  CommandResult r;
  r.command = "sweep";
  r.table = std::move(t);
  r.report["points"] = result.points.size();
  r.report["crossover"] = optional_number(result.crossover);
  return r;
}

CommandResult run_timedomain(const RunConfig& cfg) {
  if (!(cfg.time.dt > 0.0) || !(cfg.time.t_max > 0.0)) {
    throw InvalidArgument("time.t_max and time.dt must be positive");
  }
  const auto spectrum = make_spectrum(cfg);
  const auto rep = analyze(spectrum, cfg.grid, cfg.roots, cfg.peaks);
  const auto times = uniform_times(cfg.time.t_max, cfg.time.dt);
  const auto series = survival_amplitude(rep.grid, cfg.model().b(), times);
  const auto metrics = rabi_metrics(series);

  Table t;
  t.header = {"t"};
  if (physical(cfg)) t.header.emplace_back("t_seconds");
  for (const char* h : {"re_u", "im_u", "abs_u"}) t.header.emplace_back(h);
  const double d = cfg.delta_rad_s();
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    std::vector<Cell> row{series.times[i]};
    if (physical(cfg)) row.emplace_back(series.times[i] / d);
    row.insert(row.end(), {series.amplitude[i].real(), series.amplitude[i].imag(),
                           series.magnitude[i]});
    t.rows.push_back(std::move(row));
  }

  CommandResult r;
  r.command = "timedomain";
  r.table = std::move(t);
  json m;
  m["beat_period"] = optional_number(metrics.beat_period);
  m["rabi_angular_frequency"] = optional_number(metrics.rabi_angular_frequency);
  m["rabi_period"] = optional_number(metrics.rabi_period);
  m["decay_time"] = metrics.decay_time;
  m["maxima"] = metrics.maxima;
  const auto tau = fwhm_decay_time(rep.peaks);
  m["fwhm_decay_time"] = optional_number(tau);
  m["decay_time_ratio"] = tau ? json(metrics.decay_time / *tau) : json(nullptr);
  if (physical(cfg)) {
    auto seconds = [d](const std::optional<double>& v) {
      return v ? json(*v / d) : json(nullptr);
    };
    m["rabi_period_s"] = seconds(metrics.rabi_period);
    m["decay_time_s"] = metrics.decay_time / d;
    m["fwhm_decay_time_s"] = seconds(tau);
  }
  r.report["rabi_metrics"] = std::move(m);
  r.report["horizon"] = resolvable_horizon(rep.grid);
  return r;
}

CommandResult run_oracle(const RunConfig& cfg) {
  const auto m = cfg.model();
  std::vector<double> energies;
  for (double e : cfg.oracle.energies) energies.push_back(m.b() + e);
  ConvergenceOptions opt;
  opt.symmetric_placement = cfg.oracle.symmetric_placement;
  opt.pole_offset_ratio = cfg.oracle.pole_offset_ratio;
  const auto report = convergence_report(energies, cfg.oracle.spacings, m, cfg.coupling(), opt);

  Table t;
  t.header = {"spacing", "max_shift_error", "max_width_error", "max_error"};
  for (const auto& row : report.rows) {
    t.rows.push_back({row.spacing, row.max_shift_error, row.max_width_error, row.max_error()});
  }
  CommandResult r;
  r.command = "oracle";
  r.table = std::move(t);
  r.report["monotone"] = report.monotone;
  r.report["final_max_error"] = report.rows.back().max_error();
  if (!report.monotone) {
    r.exit_code = 1;
    r.diagnostic = json{{"status", "non_monotone"},
                        {"reason", "discrete-mode error did not decrease with the mode spacing"}};
  }
  return r;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"spectrum", "resonances", "sweep", "timedomain",
                                              "oracle"};
  return names;
}

CommandResult run_command(const std::string& name, const RunConfig& cfg) {
  if (name == "spectrum") return run_spectrum(cfg);
  if (name == "resonances") return run_resonances(cfg);
  if (name == "sweep") return run_sweep(cfg);
  if (name == "timedomain") return run_timedomain(cfg);
  if (name == "oracle") return run_oracle(cfg);
  throw ConfigError("unknown subcommand '" + name + "'");
}

Format default_format(const std::string& command) {
  return command == "resonances" || command == "oracle" ? Format::json : Format::csv;
}

std::vector<RenderedFile> render(const CommandResult& result, const RunConfig& cfg, Format f) {
  json doc;
  doc["command"] = result.command;
  doc["status"] = result.exit_code == 0 ? "ok" : "failed";
  doc["regime"] = std::string(to_string(cfg.resolved_regime()));
  doc["config"] = cfg.to_json();
  for (const auto& [k, v] : result.report.items()) doc[k] = v;

  std::vector<RenderedFile> files;
  if (f == Format::csv && result.table) {
    std::string csv = render_csv(*result.table);
    doc["csv"] = {{"file", result.command + ".csv"},
                  {"rows", result.table->rows.size()},
                  {"fnv1a64", hex64(fnv1a64(csv))}};
    files.push_back({result.command + ".csv", std::move(csv)});
  } else if (result.table) {
    doc["data"] = table_json(*result.table);
  }
  files.insert(files.begin() + (files.empty() ? 0 : 1),
               RenderedFile{result.command + ".json", doc.dump(2) + "\n"});
  return files;
}

}  // namespace transmon::cli
