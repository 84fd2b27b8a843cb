#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/config.hpp"

namespace nm::cli {
namespace {

namespace fs = std::filesystem;

const fs::path& scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("netmoments_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int invoke(const std::string& args) {
  const std::string cmd = std::string(NETMOMENTS_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string f; std::getline(in, f, sep);) out.push_back(f);
  return out;
}

TEST(Cli, MissingSeedIsAConfigError) {
  EXPECT_EQ(invoke("limit-sample --graphon const:0.5 --motifs k2 --draws 10"), kExitConfig);
  EXPECT_EQ(invoke("bootstrap --graphon const:0.5 --motifs k2 --n 50"), kExitConfig);
}

TEST(Cli, BadInputsMapToExitCodes) {
  EXPECT_EQ(invoke("count --graph /nonexistent/g.txt --motifs k2"), kExitIo);
  EXPECT_EQ(invoke("limit-sample --graphon const:0.5 --motifs hexagon --seed 1"), kExitConfig);
  EXPECT_EQ(invoke("frobnicate"), kExitConfig);
  const fs::path g = scratch() / "k3.txt";
  std::ofstream(g) << "0 1\n1 2\n2 0\n";
  EXPECT_EQ(invoke("structure --graph " + g.string() + " -o " + (scratch() / "s.csv").string()), kExitNumeric);
  EXPECT_EQ(invoke("count --graph " + g.string() + " --motifs k3 -o " + (scratch() / "c.jsonl").string()), kExitOk);
}

TEST(Cli, RunValidatesDirectly) {
  ExperimentConfig c;
  c.command = "limit-sample";
  c.graphon = "const:0.5";
  c.motifs = "k2";
  std::ostringstream diag;
  EXPECT_EQ(run(c, diag), kExitConfig);
  EXPECT_NE(diag.str().find("seed"), std::string::npos);
  EXPECT_TRUE(is_stochastic(c));
  c.command = "count";
  EXPECT_FALSE(is_stochastic(c));
}

TEST(Cli, OutputIsByteIdenticalAcrossRunsAndThreads) {
  const fs::path a = scratch() / "a.csv", b = scratch() / "b.csv";
  const std::string base = "limit-sample --graphon paper-w3 --motifs k2,k3 --draws 3000 --grid 64 --seed 9";
  ASSERT_EQ(invoke(base + " --threads 1 -o " + a.string()), kExitOk);
  ASSERT_EQ(invoke(base + " --threads 4 -o " + b.string()), kExitOk);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_TRUE(fs::exists(a.string() + ".json"));

  const fs::path c = scratch() / "c.csv", d = scratch() / "d.csv";
  const std::string boot = "bootstrap --graphon paper-w1 --motifs k2,k3 --n 150 --B 300 --seed 4";
  ASSERT_EQ(invoke(boot + " --threads 1 -o " + c.string()), kExitOk);
  ASSERT_EQ(invoke(boot + " --threads 3 -o " + d.string()), kExitOk);
  EXPECT_EQ(slurp(c), slurp(d));
}

TEST(Cli, ConfigHeaderReproducesRun) {
  const fs::path a = scratch() / "first.csv", b = scratch() / "second.csv";
  ASSERT_EQ(invoke("ci --graphon paper-w2 --motifs k3 --n 120 --reps 3 --B 200 --alpha 0.1 --seed 5 -o " +
                   a.string()),
            kExitOk);
  const ExperimentConfig loaded = load_config_header(a.string());
  EXPECT_EQ(loaded.command, "ci");
  EXPECT_EQ(loaded.n, 120);
  EXPECT_EQ(loaded.alpha, 0.1);
  ASSERT_TRUE(loaded.seed.has_value());
  EXPECT_EQ(*loaded.seed, 5u);
  ASSERT_EQ(invoke("ci --config " + a.string() + " -o " + b.string()), kExitOk);
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST(Cli, CoverageSummaryIsMeanOfFlags) {
  const fs::path out = scratch() / "coverage.csv";
  ASSERT_EQ(invoke("coverage-sim --graphon paper-w1 --motifs k2,k3 --n 60 --reps 8 --B 100 --seed 3 -o " +
                   out.string()),
            kExitOk);
  const auto rows = lines(slurp(out));
  int inside_col = -1, count = 0, inside = 0;
  std::string summary;
  for (const auto& line : rows) {
    if (line.rfind("# summary ", 0) == 0) summary = line;
    if (line.empty() || line[0] == '#') continue;
    const auto f = split(line, ',');
    if (inside_col < 0) {
      for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] == "inside") inside_col = static_cast<int>(i);
      ASSERT_GE(inside_col, 0);
      continue;
    }
    ++count;
    inside += std::stoi(f[inside_col]);
  }
  ASSERT_EQ(count, 8);
  const auto pos = summary.find("coverage=");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_DOUBLE_EQ(std::stod(summary.substr(pos + 9)), static_cast<double>(inside) / count);
}

TEST(Cli, CountWritesOneRecordPerMotif) {
  const fs::path g = scratch() / "c4.txt";
  std::ofstream(g) << "0 1\n1 2\n2 3\n3 0\n";
  const fs::path out = scratch() / "counts.jsonl";
  ASSERT_EQ(invoke("count --graph " + g.string() + " --motifs k2,c4,k3 -o " + out.string()), kExitOk);
  const auto rows = lines(slurp(out));
  std::vector<std::string> records;
  for (const auto& r : rows)
    if (!r.empty() && r[0] == '{') records.push_back(r);
  ASSERT_EQ(records.size(), 3u);
  EXPECT_NE(records[1].find("\"count\":1"), std::string::npos) << records[1];
  EXPECT_NE(records[2].find("\"count\":0"), std::string::npos) << records[2];
}

}  // namespace
}  // namespace nm::cli
