#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "netmoments/error.hpp"
#include "netmoments/motif.hpp"

namespace nm {
namespace {

std::string lower_trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

int parse_int(std::string_view s, std::string_view literal) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ConfigError("bad integer '" + std::string(s) + "' in motif literal '" +
                      std::string(literal) + "'");
  }
  return v;
}

Motif parse_explicit(std::string_view body, std::string_view literal) {
  // body: n=K;edges=a-b,c-d
  const auto semi = body.find(';');
  if (body.substr(0, 2) != "n=" || semi == std::string_view::npos) {
    throw ConfigError("motif literal must look like n=4;edges=1-2,2-3: '" + std::string(literal) +
                      "'");
  }
  const int k = parse_int(body.substr(2, semi - 2), literal);
  if (k < 2 || k > kMaxMotifVertices) {
    throw ConfigError("motif vertex count must be in [2, " + std::to_string(kMaxMotifVertices) +
                      "]: '" + std::string(literal) + "'");
  }
  auto rest = body.substr(semi + 1);
  if (rest.substr(0, 6) != "edges=") {
    throw ConfigError("missing edges= in motif literal '" + std::string(literal) + "'");
  }
  rest.remove_prefix(6);
  std::vector<Edge> edges;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw ConfigError("edge must be a-b in motif literal '" + std::string(literal) + "'");
    }
    const int u = parse_int(item.substr(0, dash), literal);
    const int v = parse_int(item.substr(dash + 1), literal);
    if (u < 1 || v < 1 || u > k || v > k) {
      throw ConfigError("edge endpoint out of 1.." + std::to_string(k) + " in '" +
                        std::string(literal) + "'");
    }
    edges.emplace_back(u - 1, v - 1);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  try {
    return Motif(k, std::move(edges));
  } catch (const DomainError& e) {
    throw ConfigError(std::string(e.what()) + " in '" + std::string(literal) + "'");
  }
}

}  // namespace

Motif parse_motif(std::string_view literal) {
  const std::string s = lower_trim(literal);
  if (s.empty()) throw ConfigError("empty motif literal");
  if (s.rfind("n=", 0) == 0) return parse_explicit(s, literal);
  if (s == "bowtie") return bowtie_motif();
  if (s == "k2") return edge_motif();
  if (s.size() == 3 && s[0] == 'k' && s[1] == '1' && std::isdigit(static_cast<unsigned char>(s[2]))) {
    const int leaves = s[2] - '0';
    if (leaves >= 1 && leaves + 1 <= kMaxMotifVertices) return Motif::star(leaves);
  }
  if (s.size() == 2 && std::isdigit(static_cast<unsigned char>(s[1]))) {
    const int k = s[1] - '0';
    if (s[0] == 'k' && k >= 2 && k <= kMaxMotifVertices) return Motif::complete(k);
    if (s[0] == 'c' && k >= 3 && k <= kMaxMotifVertices) return Motif::cycle(k);
    if (s[0] == 'p' && k >= 2 && k <= kMaxMotifVertices) return Motif::path(k);
  }
  throw ConfigError("unknown motif literal '" + std::string(literal) + "'");
}

std::vector<Motif> parse_motif_list(std::string_view literals) {
  // Explicit literals contain commas inside their edge lists, so split on
  // commas only outside of "n=...;edges=..." items: a new item starts at a
  // comma followed by a letter other than a digit.
  std::vector<Motif> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= literals.size(); ++i) {
    const bool at_end = i == literals.size();
    bool split = at_end;
    if (!at_end && (literals[i] == ',' || literals[i] == ' ')) {
      const std::size_t j = i + 1;
      split = j < literals.size() && !std::isdigit(static_cast<unsigned char>(literals[j]));
    }
    if (split) {
      const auto item = literals.substr(start, i - start);
      if (!lower_trim(item).empty()) out.push_back(parse_motif(item));
      start = i + 1;
    }
  }
  if (out.empty()) throw ConfigError("empty motif list");
  return out;
}

std::string motif_label(const Motif& m) {
  if (m == edge_motif()) return "k2";
  if (m == two_star_motif()) return "k12";
  if (m == triangle_motif()) return "k3";
  if (m == four_cycle_motif()) return "c4";
  if (m == bowtie_motif()) return "bowtie";
  for (int k = 4; k <= kMaxMotifVertices; ++k) {
    if (m == Motif::complete(k)) return "k" + std::to_string(k);
    if (m == Motif::cycle(k)) return "c" + std::to_string(k);
  }
  return m.to_string();
}

}  // namespace nm
