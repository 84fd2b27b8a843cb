#include <string>

#include "netmoments/error.hpp"
#include "netmoments/motif.hpp"

namespace nm {
namespace {

void check_vertex(const Motif& h, int a, const char* what) {
  if (a < 0 || a >= h.num_vertices()) {
    throw DomainError(std::string("invalid vertex index for ") + what + ": " + std::to_string(a));
  }
}

void check_pair(const Motif& h, OrderedPair p, const char* what) {
  check_vertex(h, p.first, what);
  check_vertex(h, p.second, what);
  if (p.first == p.second) throw DomainError(std::string("join pair must be distinct: ") + what);
}

MultiMotif join_pairs(const Motif& h1, OrderedPair ab, const Motif& h2, OrderedPair cd,
                      JoinMode mode) {
  const int k1 = h1.num_vertices();
  const int k2 = h2.num_vertices();
  std::vector<int> relabel(k2);
  int next = k1;
  for (int j = 0; j < k2; ++j) {
    if (j == cd.first) {
      relabel[j] = ab.first;
    } else if (j == cd.second) {
      relabel[j] = ab.second;
    } else {
      relabel[j] = next++;
    }
  }
  const bool e1 = h1.has_edge(ab.first, ab.second);
  const bool e2 = h2.has_edge(cd.first, cd.second);
  std::vector<MultiMotif::MultiEdge> edges;
  for (const auto& e : h1.edges()) edges.push_back({e, 1});
  for (const auto& [u, v] : h2.edges()) {
    const bool merged_pair = (u == cd.first && v == cd.second) || (u == cd.second && v == cd.first);
    if (merged_pair) continue;
    edges.push_back({{relabel[u], relabel[v]}, 1});
  }
  if (e2) {
    if (!e1) {
      edges.push_back({{ab.first, ab.second}, 1});
    } else if (mode == JoinMode::kStrong) {
      edges.push_back({{ab.first, ab.second}, 1});  // accumulates to multiplicity 2
    }
  }
  return MultiMotif(k1 + k2 - 2, std::move(edges));
}

}  // namespace

Motif vertex_join(const Motif& h1, int a, const Motif& h2, int b) {
  check_vertex(h1, a, "first motif");
  check_vertex(h2, b, "second motif");
  const int k1 = h1.num_vertices();
  std::vector<int> relabel(h2.num_vertices());
  int next = k1;
  for (int j = 0; j < h2.num_vertices(); ++j) relabel[j] = (j == b) ? a : next++;
  std::vector<Edge> edges = h1.edges();
  for (const auto& [u, v] : h2.edges()) edges.emplace_back(relabel[u], relabel[v]);
  return Motif(k1 + h2.num_vertices() - 1, std::move(edges));
}

MultiMotif edge_join(const Motif& h1, OrderedPair ab, const Motif& h2, OrderedPair cd,
                     JoinMode mode) {
  check_pair(h1, ab, "first motif");
  check_pair(h2, cd, "second motif");
  if (!h1.has_edge(ab.first, ab.second) || !h2.has_edge(cd.first, cd.second)) {
    throw DomainError("edge_join requires both pairs to be edges");
  }
  return join_pairs(h1, ab, h2, cd, mode);
}

MultiMotif extended_edge_join(const Motif& h1, OrderedPair ab, const Motif& h2, OrderedPair cd,
                              JoinMode mode) {
  check_pair(h1, ab, "first motif");
  check_pair(h2, cd, "second motif");
  return join_pairs(h1, ab, h2, cd, mode);
}

}  // namespace nm
