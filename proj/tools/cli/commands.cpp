#include "cli/commands.hpp"

#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>
#include <omp.h>

#include "netmoments/bootstrap.hpp"
#include "netmoments/counting.hpp"
#include "netmoments/density.hpp"
#include "netmoments/error.hpp"
#include "netmoments/fixtures.hpp"
#include "netmoments/inference.hpp"
#include "netmoments/io.hpp"
#include "netmoments/limit_law.hpp"
#include "netmoments/rng.hpp"
#include "netmoments/version.hpp"

namespace nm::cli {
namespace {

using Json = nlohmann::ordered_json;
using Row = std::vector<std::string>;

struct Table {
  std::vector<std::pair<std::string, std::string>> notes;  // extra header lines
  Row columns;
  std::vector<Row> rows;
  std::vector<std::pair<std::string, std::string>> summary;  // trailing "# summary" line
};

std::string fmt(double x) { return format_double(x); }
std::string fmt(bool b) { return b ? "1" : "0"; }

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") {
      stream_ = &std::cout;
      return;
    }
    file_.open(path, std::ios::binary);
    if (!file_) throw IoError("cannot open output file '" + path + "'");
    stream_ = &file_;
  }
  std::ostream& stream() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw IoError("write to output failed");
  }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

void write_header(std::ostream& out, const ExperimentConfig& c) {
  for (const auto& [k, v] : config_entries(c)) out << "# " << k << '=' << v << '\n';
}

void write_table(std::ostream& out, const ExperimentConfig& c, const Table& t) {
  write_header(out, c);
  for (const auto& [k, v] : t.notes) out << "# " << k << '=' << v << '\n';
  auto line = [&out](const Row& r) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
    out << '\n';
  };
  line(t.columns);
  for (const auto& r : t.rows) line(r);
  if (!t.summary.empty()) {
    out << "# summary";
    for (const auto& [k, v] : t.summary) out << ' ' << k << '=' << v;
    out << '\n';
  }
}

std::vector<Motif> motifs_of(const ExperimentConfig& c) { return parse_motif_list(c.motifs); }

std::uint64_t seed_of(const ExperimentConfig& c) { return c.seed.value_or(0); }

Graph input_graph(const ExperimentConfig& c, const std::optional<Graphon>& w, int rep) {
  if (!c.graph.empty()) return load_edge_list(c.graph);
  return sample_graph(*w, c.n, derive_seed(seed_of(c), Stream::kReplication, static_cast<std::uint64_t>(rep)));
}

std::uint64_t bootstrap_seed(const ExperimentConfig& c, int rep, std::size_t slot = 0) {
  return derive_seed(derive_seed(seed_of(c), Stream::kBootstrap, static_cast<std::uint64_t>(rep)),
                     Stream::kBootstrap, slot);
}

// Runs body(rep) for every replication, in parallel, and returns the results
// in replication order. The first exception is rethrown.
template <typename Body>
auto for_reps(int reps, Body&& body) {
  using Result = decltype(body(0));
  std::vector<Result> out(static_cast<std::size_t>(reps));
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (int rep = 0; rep < reps; ++rep) {
    try {
      out[static_cast<std::size_t>(rep)] = body(rep);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<Branch> choose_branches(const ExperimentConfig& c, const Graph& g,
                                    const std::vector<Motif>& ms) {
  std::vector<Branch> b;
  for (const Motif& h : ms) {
    if (c.branch == "linear") b.push_back(Branch::kLinear);
    else if (c.branch == "quadratic") b.push_back(Branch::kQuadratic);
    else b.push_back(regularity_test(g, h, c.scale).reject ? Branch::kLinear : Branch::kQuadratic);
  }
  return b;
}

double mean_flag(const std::vector<bool>& flags) {
  double s = 0.0;
  for (bool f : flags) s += f ? 1.0 : 0.0;
  return flags.empty() ? 0.0 : s / static_cast<double>(flags.size());
}

// --- commands --------------------------------------------------------------

void cmd_sample(const ExperimentConfig& c, Output& out, Json& results) {
  const Graph g = sample_graph(builtin_graphon(c.graphon), c.n, seed_of(c));
  write_header(out.stream(), c);
  write_edge_list(out.stream(), g);
  results["vertices"] = g.num_vertices();
  results["edges"] = g.num_edges();
}

void cmd_count(const ExperimentConfig& c, Output& out, Json& results) {
  const Graph g = load_edge_list(c.graph);
  Json records = Json::array();
  for (const Motif& h : motifs_of(c)) {
    Json r;
    r["motif"] = motif_label(h);
    r["count"] = count_copies(h, g);
    r["hat_t"] = density_hat(h, g);
    out.stream() << r.dump() << '\n';
    records.push_back(r);
  }
  results["records"] = records;
}

void cmd_limit_sample(const ExperimentConfig& c, Output& out, Json& results) {
  const Graphon w = builtin_graphon(c.graphon);
  auto ms = motifs_of(c);
  LimitSpec spec = c.branch == "auto"
                       ? make_limit_spec(ms, w, c.grid)
                       : make_limit_spec(ms, std::vector<bool>(ms.size(), c.branch == "quadratic"), w, c.grid);
  const Eigen::MatrixXd draws = sample_limit(spec, c.draws, seed_of(c));
  Table t;
  std::string flags;
  for (std::size_t i = 0; i < ms.size(); ++i) flags += (i ? "," : "") + std::string(spec.regular[i] ? "regular" : "irregular");
  t.notes.emplace_back("regularity", flags);
  for (const Motif& h : ms) t.columns.push_back(motif_label(h));
  for (Eigen::Index b = 0; b < draws.rows(); ++b) {
    Row r;
    for (Eigen::Index i = 0; i < draws.cols(); ++i) r.push_back(fmt(draws(b, i)));
    t.rows.push_back(std::move(r));
  }
  write_table(out.stream(), c, t);
  results["regularity"] = flags;
}

void cmd_bootstrap(const ExperimentConfig& c, Output& out, Json& results) {
  std::optional<Graphon> w;
  if (!c.graphon.empty()) w = builtin_graphon(c.graphon);
  const Graph g = input_graph(c, w, 0);
  const auto ms = motifs_of(c);
  const auto branches = choose_branches(c, g, ms);
  const BootstrapDraws d = multiplier_draws(g, ms, branches, c.resamples, bootstrap_seed(c, 0));
  Table t;
  std::string names;
  for (std::size_t i = 0; i < branches.size(); ++i) names += (i ? "," : "") + std::string(branch_name(branches[i]));
  t.notes.emplace_back("branches", names);
  for (const Motif& h : ms) t.columns.push_back(motif_label(h));
  for (Eigen::Index b = 0; b < d.samples.rows(); ++b) {
    Row r;
    for (Eigen::Index i = 0; i < d.samples.cols(); ++i) r.push_back(fmt(d.samples(b, i)));
    t.rows.push_back(std::move(r));
  }
  write_table(out.stream(), c, t);
  results["branches"] = names;
}

void cmd_regtest(const ExperimentConfig& c, Output& out, Json& results) {
  std::optional<Graphon> w;
  if (!c.graphon.empty()) w = builtin_graphon(c.graphon);
  const auto ms = motifs_of(c);
  const auto per_rep = for_reps(c.reps, [&](int rep) {
    const Graph g = input_graph(c, w, rep);
    std::vector<RegularityTest> tests;
    for (const Motif& h : ms) tests.push_back(regularity_test(g, h, c.scale));
    return tests;
  });
  Table t;
  t.columns = {"rep", "motif", "r", "statistic", "reject"};
  Json rates;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    std::vector<bool> flags;
    for (const auto& tests : per_rep) flags.push_back(tests[i].reject);
    rates[motif_label(ms[i])] = mean_flag(flags);
    t.summary.emplace_back("reject_rate_" + motif_label(ms[i]), fmt(mean_flag(flags)));
  }
  for (std::size_t rep = 0; rep < per_rep.size(); ++rep)
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const auto& r = per_rep[rep][i];
      t.rows.push_back({std::to_string(rep), motif_label(ms[i]), fmt(r.r), fmt(r.statistic), fmt(r.reject)});
    }
  write_table(out.stream(), c, t);
  results["reject_rate"] = rates;
}

void cmd_ci(const ExperimentConfig& c, Output& out, Json& results) {
  std::optional<Graphon> w;
  if (!c.graphon.empty()) w = builtin_graphon(c.graphon);
  const auto ms = motifs_of(c);
  std::vector<double> truth;
  if (w) for (const Motif& h : ms) truth.push_back(hom_density(h, *w));
  const auto per_rep = for_reps(c.reps, [&](int rep) {
    const Graph g = input_graph(c, w, rep);
    std::vector<MarginalInterval> cis;
    for (std::size_t i = 0; i < ms.size(); ++i)
      cis.push_back(marginal_ci(g, ms[i], c.alpha, c.resamples, bootstrap_seed(c, rep, i), c.scale));
    return cis;
  });
  Table t;
  t.columns = {"rep", "motif", "branch", "t_hat", "lower", "upper"};
  if (w) {
    t.columns.push_back("truth");
    t.columns.push_back("inside");
  }
  std::vector<bool> flags;
  for (std::size_t rep = 0; rep < per_rep.size(); ++rep)
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const auto& ci = per_rep[rep][i];
      Row r{std::to_string(rep), motif_label(ms[i]), std::string(branch_name(ci.branch)), fmt(ci.t_hat),
            fmt(ci.lower), fmt(ci.upper)};
      if (w) {
        flags.push_back(ci.contains(truth[i]));
        r.push_back(fmt(truth[i]));
        r.push_back(fmt(flags.back()));
      }
      t.rows.push_back(std::move(r));
    }
  if (w) {
    t.summary.emplace_back("coverage", fmt(mean_flag(flags)));
    results["coverage"] = mean_flag(flags);
  }
  write_table(out.stream(), c, t);
}

struct JointOutcome {
  ConfidenceReport report;
  double norm = 0.0;
  bool inside = false;
};

void cmd_joint_ci(const ExperimentConfig& c, Output& out, Json& results) {
  std::optional<Graphon> w;
  if (!c.graphon.empty()) w = builtin_graphon(c.graphon);
  const auto ms = motifs_of(c);
  std::vector<double> truth;
  if (w) for (const Motif& h : ms) truth.push_back(hom_density(h, *w));
  const auto per_rep = for_reps(c.reps, [&](int rep) {
    const Graph g = input_graph(c, w, rep);
    JointOutcome o{joint_confidence_set(g, ms, c.alpha, c.resamples, bootstrap_seed(c, rep), c.scale)};
    if (w) {
      o.norm = o.report.norm(truth);
      o.inside = o.norm <= o.report.quantile;
    }
    return o;
  });
  Table t;
  t.columns = {"rep", "motif", "selected", "statistic", "t_hat", "exponent", "quantile"};
  if (w) {
    t.columns.push_back("norm");
    t.columns.push_back("inside");
  }
  std::vector<bool> flags;
  for (std::size_t rep = 0; rep < per_rep.size(); ++rep) {
    const auto& o = per_rep[rep];
    flags.push_back(o.inside);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      Row r{std::to_string(rep), motif_label(ms[i]), fmt(static_cast<bool>(o.report.selected[i])),
            fmt(o.report.statistics[i]), fmt(o.report.point_estimates[i]), fmt(o.report.exponents[i]),
            fmt(o.report.quantile)};
      if (w) {
        r.push_back(fmt(o.norm));
        r.push_back(fmt(o.inside));
      }
      t.rows.push_back(std::move(r));
    }
  }
  if (w) {
    t.summary.emplace_back("coverage", fmt(mean_flag(flags)));
    results["coverage"] = mean_flag(flags);
  }
  write_table(out.stream(), c, t);
}

void cmd_structure(const ExperimentConfig& c, Output& out, Json& results) {
  std::optional<Graphon> w;
  if (!c.graphon.empty()) w = builtin_graphon(c.graphon);
  const auto per_rep = for_reps(c.reps, [&](int rep) { return structure_test(input_graph(c, w, rep), c.alpha); });
  Table t;
  t.columns = {"rep", "f_hat", "t_n", "z_crit", "reject"};
  std::vector<bool> flags;
  for (std::size_t rep = 0; rep < per_rep.size(); ++rep) {
    const auto& r = per_rep[rep];
    flags.push_back(r.reject);
    t.rows.push_back({std::to_string(rep), fmt(r.f_hat), fmt(r.t_n), fmt(r.z_crit), fmt(r.reject)});
  }
  t.summary.emplace_back("reject_rate", fmt(mean_flag(flags)));
  results["reject_rate"] = mean_flag(flags);
  write_table(out.stream(), c, t);
}

void cmd_coverage(const ExperimentConfig& c, Output& out, Json& results) {
  const Graphon w = builtin_graphon(c.graphon);
  const auto ms = motifs_of(c);
  std::vector<double> truth;
  for (const Motif& h : ms) truth.push_back(hom_density(h, w));
  Table t;
  std::vector<bool> flags;
  if (c.mode == "joint") {
    const auto per_rep = for_reps(c.reps, [&](int rep) {
      const Graph g = input_graph(c, w, rep);
      const auto rep_ = joint_confidence_set(g, ms, c.alpha, c.resamples, bootstrap_seed(c, rep), c.scale);
      return std::pair{rep_.norm(truth), rep_.quantile};
    });
    t.columns = {"rep", "inside", "norm", "quantile"};
    for (std::size_t rep = 0; rep < per_rep.size(); ++rep) {
      const auto [norm, q] = per_rep[rep];
      flags.push_back(norm <= q);
      t.rows.push_back({std::to_string(rep), fmt(flags.back()), fmt(norm), fmt(q)});
    }
  } else {
    const auto per_rep = for_reps(c.reps, [&](int rep) {
      const Graph g = input_graph(c, w, rep);
      std::vector<MarginalInterval> cis;
      for (std::size_t i = 0; i < ms.size(); ++i)
        cis.push_back(marginal_ci(g, ms[i], c.alpha, c.resamples, bootstrap_seed(c, rep, i), c.scale));
      return cis;
    });
    t.columns = {"rep", "motif", "inside", "lower", "upper"};
    for (std::size_t rep = 0; rep < per_rep.size(); ++rep)
      for (std::size_t i = 0; i < ms.size(); ++i) {
        const auto& ci = per_rep[rep][i];
        flags.push_back(ci.contains(truth[i]));
        t.rows.push_back({std::to_string(rep), motif_label(ms[i]), fmt(flags.back()), fmt(ci.lower), fmt(ci.upper)});
      }
  }
  std::string truths;
  for (std::size_t i = 0; i < truth.size(); ++i) truths += (i ? "," : "") + fmt(truth[i]);
  t.notes.emplace_back("truth", truths);
  t.summary.emplace_back("coverage", fmt(mean_flag(flags)));
  results["coverage"] = mean_flag(flags);
  write_table(out.stream(), c, t);
}

void dispatch(const ExperimentConfig& c, Output& out, Json& results) {
  const std::string& cmd = c.command;
  if (cmd == "sample") cmd_sample(c, out, results);
  else if (cmd == "count") cmd_count(c, out, results);
  else if (cmd == "limit-sample") cmd_limit_sample(c, out, results);
  else if (cmd == "bootstrap") cmd_bootstrap(c, out, results);
  else if (cmd == "regtest") cmd_regtest(c, out, results);
  else if (cmd == "ci") cmd_ci(c, out, results);
  else if (cmd == "joint-ci") cmd_joint_ci(c, out, results);
  else if (cmd == "structure") cmd_structure(c, out, results);
  else cmd_coverage(c, out, results);
}

void write_summary(const ExperimentConfig& c, const Json& results, double seconds) {
  std::string path = c.summary;
  if (path.empty() && !c.out.empty() && c.out != "-") path = c.out + ".json";
  if (path.empty()) return;
  Json j;
  Json cfg;
  for (const auto& [k, v] : config_entries(c)) cfg[k] = v;
  j["config"] = cfg;
  j["version"] = kVersion;
  j["git_describe"] = kGitDescribe;
  j["threads"] = omp_get_max_threads();
  j["wall_time_seconds"] = seconds;
  j["results"] = results;
  std::ofstream f(path);
  if (!f) throw IoError("cannot open summary file '" + path + "'");
  f << j.dump(2) << '\n';
  if (!f) throw IoError("write to summary file failed");
}

}  // namespace

int run(const ExperimentConfig& config, std::ostream& diag) {
  try {
    validate(config);
    if (config.threads > 0) omp_set_num_threads(config.threads);
    const auto start = std::chrono::steady_clock::now();
    Output out(config.out);
    Json results = Json::object();
    dispatch(config, out, results);
    out.finish();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_summary(config, results, seconds);
    return kExitOk;
  } catch (const ConfigError& e) {
    diag << "error: " << e.what() << "\nrun 'netmoments " << config.command
         << " --help' for usage\n";
    return kExitConfig;
  } catch (const IoError& e) {
    diag << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    diag << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    diag << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int main_entry(int argc, char** argv) {
  ParseResult parsed;
  try {
    parsed = parse_command_line(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  }
  if (parsed.exit_now) return parsed.exit_code;
  return run(parsed.config, std::cerr);
}

}  // namespace nm::cli
