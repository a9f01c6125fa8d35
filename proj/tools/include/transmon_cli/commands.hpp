#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "transmon_cli/config.hpp"
#include "transmon_cli/output.hpp"

namespace transmon::cli {

enum class Format { csv, json };

struct CommandResult {
  std::string command;
  std::optional<Table> table;
  /// Command-specific report fields, merged into the JSON document.
  nlohmann::ordered_json report = nlohmann::ordered_json::object();
  int exit_code = 0;
  /// Single-line reason printed to stderr when exit_code != 0.
  std::optional<nlohmann::ordered_json> diagnostic;
};

CommandResult run_spectrum(const RunConfig& cfg);
CommandResult run_resonances(const RunConfig& cfg);
CommandResult run_sweep(const RunConfig& cfg);
CommandResult run_timedomain(const RunConfig& cfg);
CommandResult run_oracle(const RunConfig& cfg);

/// Dispatch by subcommand name; throws ConfigError for unknown names.
CommandResult run_command(const std::string& name, const RunConfig& cfg);

const std::vector<std::string>& command_names();

/// Preferred output format when --format is not given.
Format default_format(const std::string& command);

struct RenderedFile {
  std::string name;
  std::string content;
};

/// The JSON document (config echo, regime, report, and either the CSV checksum
/// or the inline table) plus the CSV body when format is csv.
std::vector<RenderedFile> render(const CommandResult& result, const RunConfig& cfg, Format f);

}  // namespace transmon::cli
