#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "netmoments/motif.hpp"

namespace nm {

// Simple undirected graph with both a bitset adjacency (for set
// intersections in the counting kernels) and sorted neighbor lists.
class Graph {
 public:
  Graph() = default;

  // Duplicate pairs (in either orientation) are merged; self-loops and out of
  // range endpoints throw DomainError.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_adjacency(const Eigen::MatrixXi& adjacency);

  int num_vertices() const { return n_; }
  std::int64_t num_edges() const { return m_; }
  bool adjacent(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1u; }
  int degree(int v) const { return degrees_[v]; }
  const std::vector<int>& degrees() const { return degrees_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  int words_per_row() const { return words_; }
  const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

  std::vector<Edge> edge_list() const;
  Eigen::MatrixXd adjacency_matrix() const;

  // perm[v] is the new label of vertex v.
  Graph relabeled(std::span<const int> perm) const;

 private:
  int n_ = 0;
  int words_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> degrees_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph empty_graph(int n);

}  // namespace nm
