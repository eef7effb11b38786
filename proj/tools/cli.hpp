#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace econlab_cli {

enum class Subcommand {
  det,
  eig,
  cramer,
  companion,
  taylor,
  sphere,
  carbon,
  crra,
  ramsey_steady,
  ramsey_linearize,
  ramsey_saddle,
  ramsey_simulate,
  ramsey_verify,
};

enum class Format { csv, svg, text };

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitDomain = 3,
  kExitConvergence = 4,
  kExitIo = 5,
};

struct RunConfig {
  Subcommand subcommand;
  std::map<std::string, std::string> params;  // option name without dashes -> raw value
  std::optional<std::string> output_path;
  Format format;
};

struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = kExitOk;
  std::string message;  // usage text or error, empty on success
};

const char* subcommand_name(Subcommand s);

/// `args` excludes the program name.
ParseResult parse_args(const std::vector<std::string>& args);

/// Writes the primary artifact to config.output_path or `out`; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace econlab_cli
