#include "netmoments/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "netmoments/error.hpp"

namespace nm {
namespace {

bool parse_long(std::string_view s, long long& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  long long declared_n = -1;
  long long max_label = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::istringstream c(line.substr(hash + 1));
      std::string tok;
      c >> tok;
      if (tok.rfind("n=", 0) == 0) {
        if (!parse_long(std::string_view(tok).substr(2), declared_n) || declared_n < 0) {
          throw IoError("line " + std::to_string(line_no) + ": bad vertex count '" + tok + "'");
        }
      }
      line.resize(hash);
    }
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;
    if (!(ls >> b) || (ls >> extra)) {
      throw IoError("line " + std::to_string(line_no) + ": expected exactly two vertex labels");
    }
    long long u = 0, v = 0;
    if (!parse_long(a, u) || !parse_long(b, v) || u < 0 || v < 0 || u > 1'000'000'000 ||
        v > 1'000'000'000) {
      throw IoError("line " + std::to_string(line_no) + ": vertex labels must be non-negative integers");
    }
    if (u == v) throw IoError("line " + std::to_string(line_no) + ": self-loop");
    max_label = std::max({max_label, u, v});
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (in.bad()) throw IoError("read error in edge list");
  long long n = max_label + 1;
  if (declared_n >= 0) {
    if (declared_n < n) {
      throw IoError("edge list declares n=" + std::to_string(declared_n) + " but uses label " +
                    std::to_string(max_label));
    }
    n = declared_n;
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# n=" << g.num_vertices() << '\n';
  for (const auto& [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
}

Graphon parse_block_graphon(const std::string& json_text, const std::string& name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(std::string("block graphon JSON does not parse: ") + e.what());
  }
  if (!j.is_object() || !j.contains("sizes") || !j.contains("values")) {
    throw IoError("block graphon JSON needs \"sizes\" and \"values\"");
  }
  std::vector<double> sizes;
  std::vector<std::vector<double>> rows;
  try {
    sizes = j.at("sizes").get<std::vector<double>>();
    rows = j.at("values").get<std::vector<std::vector<double>>>();
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("block graphon JSON has the wrong shape: ") + e.what());
  }
  const auto b = static_cast<Eigen::Index>(sizes.size());
  if (static_cast<Eigen::Index>(rows.size()) != b) throw DomainError("values must have one row per block");
  Eigen::MatrixXd v(b, b);
  for (Eigen::Index i = 0; i < b; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != b) throw DomainError("values must be square");
    for (Eigen::Index c = 0; c < b; ++c) v(i, c) = rows[i][c];
  }
  return Graphon::block(std::move(sizes), v, name);
}

Graphon load_block_graphon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graphon file '" + path + "' (and it is not a builtin name)");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_block_graphon(ss.str(), path);
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

}  // namespace nm
