#include "netmoments/graph.hpp"

#include <algorithm>
#include <string>

#include "netmoments/error.hpp"

namespace nm {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw DomainError("graph vertex count must be non-negative");
  Graph g;
  g.n_ = n;
  g.words_ = (n + 63) / 64;
  g.bits_.assign(static_cast<std::size_t>(n) * g.words_, 0);
  g.adj_.assign(n, {});
  g.degrees_.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw DomainError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") out of range for " + std::to_string(n) + " vertices");
    }
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (g.adjacent(u, v)) continue;
    g.bits_[static_cast<std::size_t>(u) * g.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    g.bits_[static_cast<std::size_t>(v) * g.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    ++g.m_;
  }
  for (int v = 0; v < n; ++v) {
    std::sort(g.adj_[v].begin(), g.adj_[v].end());
    g.degrees_[v] = static_cast<int>(g.adj_[v].size());
  }
  return g;
}

Graph Graph::from_adjacency(const Eigen::MatrixXi& a) {
  if (a.rows() != a.cols()) throw DomainError("adjacency matrix must be square");
  std::vector<Edge> edges;
  const int n = static_cast<int>(a.rows());
  for (int u = 0; u < n; ++u) {
    if (a(u, u) != 0) throw DomainError("adjacency matrix has a nonzero diagonal");
    for (int v = u + 1; v < n; ++v) {
      if (a(u, v) != a(v, u)) throw DomainError("adjacency matrix is not symmetric");
      if (a(u, v) != 0) edges.emplace_back(u, v);
    }
  }
  return from_edges(n, edges);
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Eigen::MatrixXd Graph::adjacency_matrix() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u]) a(u, v) = 1.0;
  return a;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw DomainError("permutation has the wrong length");
  auto edges = edge_list();
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
  }
  return from_edges(n_, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph::from_edges(n, e);
}

Graph empty_graph(int n) { return Graph::from_edges(n, {}); }

}  // namespace nm
