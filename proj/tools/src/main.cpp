#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "transmon/error.hpp"
#include "transmon_cli/commands.hpp"
#include "transmon_cli/config.hpp"

namespace {

using transmon::cli::ConfigError;
using transmon::cli::Format;

std::string describe(const std::string& name) {
  if (name == "spectrum") return "Tabulate U_ff(E) with its self-energy on an adaptive grid";
  if (name == "resonances") return "Resonance roots, spectral peaks, Rabi frequency and decay time";
  if (name == "sweep") return "Track the principal resonance over a range of L2";
  if (name == "timedomain") return "Fourier-synthesize U(t) and extract Rabi/decay metrics";
  if (name == "oracle") return "Compare discrete-mode sums against the continuum self-energy";
  return {};
}

int fail(const std::string& status, const std::string& reason, int code) {
  std::cerr << nlohmann::ordered_json{{"status", status}, {"reason", reason}}.dump() << '\n';
  return code;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decay spectrum of a three-level transmon coupled to a Gaussian continuum"};
  app.require_subcommand(1);

  std::string config_path;
  std::string positional_config;
  std::string out_dir;
  std::string format_name;
  std::vector<std::string> overrides;

  for (const auto& name : transmon::cli::command_names()) {
    auto* sub = app.add_subcommand(name, describe(name));
    sub->add_option("path", positional_config, "Config file (same as --config)");
    sub->add_option("--config", config_path, "Config file");
    sub->add_option("--out", out_dir, "Output directory (default: stdout)");
    sub->add_option("--format", format_name, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--set", overrides, "section.key=value override (repeatable)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("config_error", e.what(), 2);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (!config_path.empty() && !positional_config.empty()) {
      throw ConfigError("give the config either positionally or via --config, not both");
    }
    const std::string path = config_path.empty() ? positional_config : config_path;
    auto cfg = path.empty() ? transmon::cli::parse_config("") : transmon::cli::load_config(path);
    transmon::cli::apply_overrides(cfg, overrides);
    if (!cfg.model().extended_bound_reliable()) {
      std::cerr << nlohmann::ordered_json{{"status", "warning"},
                                          {"reason",
                                           "a < 20: extending the frequency integrals to "
                                           "-infinity is no longer accurate"}}
                       .dump()
                << '\n';
    }

    const Format format = format_name.empty() ? transmon::cli::default_format(command)
                          : format_name == "csv" ? Format::csv
                                                 : Format::json;
    const auto result = transmon::cli::run_command(command, cfg);
    const auto files = transmon::cli::render(result, cfg, format);

    if (out_dir.empty()) {
      // CSV body when present, otherwise the JSON document.
      std::cout << files.front().content << std::flush;
    } else {
      std::filesystem::create_directories(out_dir);
      for (const auto& f : files) write_file(std::filesystem::path(out_dir) / f.name, f.content);
    }
    if (result.diagnostic) std::cerr << result.diagnostic->dump() << '\n';
    return result.exit_code;
  } catch (const ConfigError& e) {
    return fail("config_error", e.what(), 2);
  } catch (const transmon::InvalidArgument& e) {
    return fail("config_error", e.what(), 2);
  } catch (const transmon::PoleCollision& e) {
    return fail("pole_collision", e.what(), 2);
  } catch (const transmon::NumericalError& e) {
    return fail("numerical_error", e.what(), 1);
  } catch (const std::filesystem::filesystem_error& e) {
    return fail("io_error", e.what(), 2);
  } catch (const std::exception& e) {
    return fail("numerical_error", e.what(), 1);
  }
}
