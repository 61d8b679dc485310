#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sptj {

enum class OutputFormat { kCsv, kJson, kPlain };

/// Parsed command line. Zero means "not given" for the integer parameters.
struct RunConfig {
  std::string subcommand;  // compute | verify | table | congruence
  std::string family;      // compute: p | spt | spt_k | Spt_j | jspt_k
  std::string identity;    // verify
  std::string route = "gf";
  std::string source = "gf";  // table: gf | comb
  int j = 0;
  int k = 0;
  int r = 0;
  std::optional<int> m;
  std::optional<int> t;
  int n_max = 0;
  /// Defaults to csv for compute and table, plain for verify and congruence.
  std::optional<OutputFormat> format;
  std::optional<std::string> cache;
  bool list = false;
};

enum ExitCode { kExitOk = 0, kExitDiscrepancy = 1, kExitUsage = 2 };

/// Parses `args` (without the program name) and runs the subcommand.
/// Data goes to `out`, diagnostics to `err`. Returns an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already parsed configuration.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace sptj
