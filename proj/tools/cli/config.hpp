#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nm::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitConfig = 2,
  kExitIo = 3,
  kExitNumeric = 4,
};

struct ExperimentConfig {
  std::string command;
  std::string graphon;       // builtin name or block-graphon JSON path
  std::string graph;         // edge-list path
  std::string motifs;        // comma-separated literals
  int n = 0;
  std::int64_t resamples = 1000;
  double alpha = 0.05;
  int reps = 1;
  std::optional<std::uint64_t> seed;
  int grid = 512;
  std::int64_t draws = 10000;
  std::string branch = "auto";  // auto | linear | quadratic
  std::string mode = "joint";   // coverage-sim: joint | marginal
  std::optional<double> scale;  // regularity threshold sequence, default sqrt(n)
  std::string out;              // "-" or empty: standard output
  std::string summary;          // JSON summary path, default <out>.json
  int threads = 0;              // 0: OpenMP default
};

// Resolved configuration as ordered key/value pairs, written as the
// "# key=value" header of every CSV report. Thread count and output paths are
// left out so reports do not depend on them.
std::vector<std::pair<std::string, std::string>> config_entries(const ExperimentConfig& c);

// Reads the "# key=value" lines at the top of a CSV report back into a config.
ExperimentConfig load_config_header(const std::string& path);

// Throws ConfigError when a field required by the command is missing or out
// of range.
void validate(const ExperimentConfig& c);

bool is_stochastic(const ExperimentConfig& c);

struct ParseResult {
  ExperimentConfig config;
  bool exit_now = false;  // help was printed or parsing failed
  int exit_code = kExitOk;
};
ParseResult parse_command_line(int argc, char** argv);

}  // namespace nm::cli
