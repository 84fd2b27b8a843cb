#pragma once

// Independent slow reference computations used as test oracles. None of
// these call into the library's counting or density code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "netmoments/graph.hpp"
#include "netmoments/motif.hpp"
#include "netmoments/rng.hpp"

namespace nm::testing {

// Number of subgraphs of g isomorphic to h: for every k-subset of vertices,
// collect the distinct edge sets obtained by placing h on the subset in all
// k! ways and keeping the placements whose edges are all present.
inline std::int64_t copies_by_subsets(const Motif& h, const Graph& g) {
  const int k = h.num_vertices();
  const int n = g.num_vertices();
  if (n < k) return 0;
  std::int64_t total = 0;
  std::vector<int> pick(k);
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == k) {
      std::set<std::vector<std::pair<int, int>>> images;
      std::vector<int> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<std::pair<int, int>> img;
        bool ok = true;
        for (const auto& [a, b] : h.edges()) {
          const int u = pick[perm[a]];
          const int v = pick[perm[b]];
          if (!g.adjacent(u, v)) {
            ok = false;
            break;
          }
          img.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (ok) {
          std::sort(img.begin(), img.end());
          images.insert(img);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      total += static_cast<std::int64_t>(images.size());
      return;
    }
    for (int v = start; v < n; ++v) {
      pick[depth] = v;
      choose(v + 1, depth + 1);
    }
  };
  choose(0, 0);
  return total;
}

// Homomorphism density of a (multi)graph given as a pair list with
// multiplicities on a block graphon, by summing over all block assignments.
inline double block_density(int k, const std::vector<std::pair<std::pair<int, int>, int>>& edges,
                            const Eigen::VectorXd& sizes, const Eigen::MatrixXd& values) {
  const int b = static_cast<int>(sizes.size());
  std::vector<int> assign(k, 0);
  double total = 0.0;
  while (true) {
    double term = 1.0;
    for (int v = 0; v < k; ++v) term *= sizes(assign[v]);
    for (const auto& [e, mult] : edges) term *= std::pow(values(assign[e.first], assign[e.second]), mult);
    total += term;
    int pos = 0;
    while (pos < k && ++assign[pos] == b) assign[pos++] = 0;
    if (pos == k) break;
  }
  return total;
}

inline double block_density(const Motif& h, const Eigen::VectorXd& sizes, const Eigen::MatrixXd& values) {
  std::vector<std::pair<std::pair<int, int>, int>> edges;
  for (const auto& e : h.edges()) edges.push_back({e, 1});
  return block_density(h.num_vertices(), edges, sizes, values);
}

// Erdos-Renyi graph from an explicit coin stream, independent of sample_graph.
inline Graph coin_graph(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform() < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace nm::testing
