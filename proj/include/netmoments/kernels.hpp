#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "netmoments/graph.hpp"
#include "netmoments/motif.hpp"

// Hot loops of the library. The OpenMP versions live in nm::kernels; serial
// versions with the same contracts live in nm::reference and exist for
// testing and benchmarking only.

namespace nm {

// Integer matrix stored row-major.
struct CountMatrix {
  int n = 0;
  std::vector<std::int64_t> data;
  std::int64_t operator()(int u, int v) const { return data[static_cast<std::size_t>(u) * n + v]; }
  std::int64_t& operator()(int u, int v) { return data[static_cast<std::size_t>(u) * n + v]; }
};

// Per-vertex counts X_a(v): injective maps with vertex a sent to v.
struct RootedCounts {
  std::vector<std::vector<std::int64_t>> by_vertex;  // [a][v]
};

namespace kernels {

// c(u,v) = |N(u) ∩ N(v)| for u != v, and c(v,v) = deg(v).
CountMatrix common_neighbors(const Graph& g);
// Number of walks of length 3 between u and v.
CountMatrix walks3(const Graph& g, const CountMatrix& common);

// Injective homomorphisms of h into g, by backtracking over candidate sets
// formed from bitset intersections, parallel over the image of the first
// motif vertex.
std::int64_t count_injective(const Motif& h, const Graph& g);
RootedCounts rooted_injective(const Motif& h, const Graph& g);
// P(u,v) = sum_{a != b} X_{a,b}(u,v), the number of (map, ordered pair)
// combinations with a -> u and b -> v.
Eigen::MatrixXd pair_injective(const Motif& h, const Graph& g);

// out(b) = z_b^T M z_b for every column z_b of Z.
Eigen::VectorXd quadratic_forms(const Eigen::MatrixXd& m, const Eigen::MatrixXd& z);

}  // namespace kernels

namespace reference {

CountMatrix common_neighbors(const Graph& g);
CountMatrix walks3(const Graph& g);
std::int64_t count_injective(const Motif& h, const Graph& g);
RootedCounts rooted_injective(const Motif& h, const Graph& g);
Eigen::MatrixXd pair_injective(const Motif& h, const Graph& g);
Eigen::VectorXd quadratic_forms(const Eigen::MatrixXd& m, const Eigen::MatrixXd& z);

}  // namespace reference
}  // namespace nm
