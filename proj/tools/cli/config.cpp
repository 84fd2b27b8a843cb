#include "cli/config.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <set>
#include <string_view>

#include "netmoments/error.hpp"
#include "netmoments/io.hpp"

namespace nm::cli {
namespace {

const std::set<std::string, std::less<>> kCommands = {
    "sample", "count", "limit-sample", "bootstrap", "regtest",
    "ci",     "joint-ci", "structure", "coverage-sim"};

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("bad value '" + std::string(text) + "' for " + std::string(key));
  }
  return value;
}

void set_entry(ExperimentConfig& c, std::string_view key, std::string_view value) {
  const std::string v(value);
  if (key == "command") c.command = v;
  else if (key == "graphon") c.graphon = v;
  else if (key == "graph") c.graph = v;
  else if (key == "motifs") c.motifs = v;
  else if (key == "n") c.n = parse_number<int>(key, value);
  else if (key == "B") c.resamples = parse_number<std::int64_t>(key, value);
  else if (key == "alpha") c.alpha = parse_number<double>(key, value);
  else if (key == "reps") c.reps = parse_number<int>(key, value);
  else if (key == "seed") c.seed = value.empty() ? std::nullopt : std::optional(parse_number<std::uint64_t>(key, value));
  else if (key == "grid") c.grid = parse_number<int>(key, value);
  else if (key == "draws") c.draws = parse_number<std::int64_t>(key, value);
  else if (key == "branch") c.branch = v;
  else if (key == "mode") c.mode = v;
  else if (key == "scale") c.scale = value.empty() ? std::nullopt : std::optional(parse_number<double>(key, value));
  // Unknown keys (summary lines, version) are ignored so any report header
  // can be fed back.
}

bool has_source(const ExperimentConfig& c) { return !c.graph.empty() || !c.graphon.empty(); }

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

std::vector<std::pair<std::string, std::string>> config_entries(const ExperimentConfig& c) {
  return {
      {"command", c.command},
      {"graphon", c.graphon},
      {"graph", c.graph},
      {"motifs", c.motifs},
      {"n", std::to_string(c.n)},
      {"B", std::to_string(c.resamples)},
      {"alpha", format_double(c.alpha)},
      {"reps", std::to_string(c.reps)},
      {"seed", c.seed ? std::to_string(*c.seed) : ""},
      {"grid", std::to_string(c.grid)},
      {"draws", std::to_string(c.draws)},
      {"branch", c.branch},
      {"mode", c.mode},
      {"scale", c.scale ? format_double(*c.scale) : ""},
  };
}

ExperimentConfig load_config_header(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  ExperimentConfig c;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] != '#') break;
    std::string_view body(line);
    body.remove_prefix(1);
    while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) continue;
    set_entry(c, body.substr(0, eq), body.substr(eq + 1));
  }
  return c;
}

bool is_stochastic(const ExperimentConfig& c) {
  if (c.command == "count") return false;
  if (c.command == "regtest" || c.command == "structure") return c.graph.empty();
  return true;
}

void validate(const ExperimentConfig& c) {
  const std::string& cmd = c.command;
  require(kCommands.count(cmd) == 1, "unknown command '" + cmd + "'");
  require(c.graph.empty() || c.graphon.empty(), "give either --graph or --graphon, not both");
  require(c.branch == "auto" || c.branch == "linear" || c.branch == "quadratic",
          "--branch must be auto, linear or quadratic");
  require(c.mode == "joint" || c.mode == "marginal", "--mode must be joint or marginal");
  require(c.alpha > 0.0 && c.alpha < 1.0, "--alpha must lie in (0, 1)");
  require(c.reps >= 1, "--reps must be at least 1");
  require(c.resamples >= 1, "--B must be at least 1");
  require(!c.scale || *c.scale > 0.0, "--scale must be positive");

  const bool needs_motifs = cmd != "sample" && cmd != "structure";
  if (needs_motifs) require(!c.motifs.empty(), "--motifs is required for " + cmd);

  if (cmd == "sample" || cmd == "limit-sample" || cmd == "coverage-sim") {
    require(!c.graphon.empty(), "--graphon is required for " + cmd);
  } else if (cmd == "count") {
    require(!c.graph.empty(), "--graph is required for count");
  } else {
    require(has_source(c), "--graph or --graphon is required for " + cmd);
  }
  if (!c.graphon.empty() && cmd != "limit-sample") require(c.n >= 1, "--n is required with --graphon");
  if (!c.graph.empty()) require(c.reps == 1, "--reps applies only to graphon-sampled inputs");
  if (cmd == "limit-sample") {
    require(c.grid >= 32, "--grid must be at least 32");
    require(c.draws >= 1, "--draws must be at least 1");
  }
  if (is_stochastic(c)) require(c.seed.has_value(), "--seed is required for " + cmd);
}

ParseResult parse_command_line(int argc, char** argv) {
  ParseResult result;
  ExperimentConfig& cfg = result.config;

  // --config is applied first so explicit flags override it.
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg(argv[i]);
    if (arg == "--config" && i + 1 < argc) cfg = load_config_header(argv[i + 1]);
    else if (arg.starts_with("--config=")) cfg = load_config_header(std::string(arg.substr(9)));
  }

  CLI::App app{"Subgraph-count inference for graphon models", "netmoments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("netmoments"));

  const std::vector<std::pair<std::string, std::string>> subs = {
      {"sample", "Sample a W-random graph and write its edge list"},
      {"count", "Count motif copies in an edge list"},
      {"limit-sample", "Draw from the joint limit law of normalized counts"},
      {"bootstrap", "Multiplier-bootstrap draws for an observed graph"},
      {"regtest", "Regularity test per motif"},
      {"ci", "Marginal confidence intervals per motif"},
      {"joint-ci", "Joint confidence set for several motif densities"},
      {"structure", "Test for constant-graphon structure"},
      {"coverage-sim", "Coverage of confidence sets over replications"},
  };
  std::string config_path;
  for (const auto& [name, help] : subs) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--config", config_path, "Reuse the header of an earlier CSV report");
    s->add_option("--graphon", cfg.graphon,
                  "const:p, bipartite:p, wminus, wplus, paper-w1, paper-w2, paper-w3, or a JSON file");
    s->add_option("--graph", cfg.graph, "Edge-list file");
    s->add_option("--motifs,--motif", cfg.motifs, "Comma-separated motif literals (k2, k3, c4, ...)");
    s->add_option("--n", cfg.n, "Number of vertices");
    s->add_option("--B", cfg.resamples, "Bootstrap resamples");
    s->add_option("--alpha", cfg.alpha, "Significance level");
    s->add_option("--reps", cfg.reps, "Replications");
    s->add_option_function<std::uint64_t>("--seed", [&cfg](const std::uint64_t& v) { cfg.seed = v; },
                                          "Root seed");
    s->add_option("--grid", cfg.grid, "Discretization size for the limit law");
    s->add_option("--draws", cfg.draws, "Number of limit draws");
    s->add_option("--branch", cfg.branch, "auto, linear or quadratic");
    s->add_option("--mode", cfg.mode, "joint or marginal (coverage-sim)");
    s->add_option_function<double>("--scale", [&cfg](const double& v) { cfg.scale = v; },
                                   "Regularity threshold sequence, default sqrt(n)");
    s->add_option("-o,--out", cfg.out, "Output file, '-' for standard output");
    s->add_option("--summary", cfg.summary, "JSON summary path, default <out>.json");
    s->add_option("--threads", cfg.threads, "Worker threads, 0 for the default");
    s->callback([&cfg, name = name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    result.exit_now = true;
    const int code = app.exit(e);
    result.exit_code = code == 0 ? kExitOk : kExitConfig;
  }
  return result;
}

}  // namespace nm::cli
