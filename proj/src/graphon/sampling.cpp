#include <string>

#include "netmoments/error.hpp"
#include "netmoments/graphon.hpp"
#include "netmoments/rng.hpp"

namespace nm {

Graph sample_graph(const Graphon& w, int n, std::uint64_t seed, std::vector<double>* labels) {
  if (n <= 0) throw DomainError("sample size must be positive, got " + std::to_string(n));
  Rng rng(seed, Stream::kGraph);
  std::vector<double> u(n);
  for (double& x : u) x = rng.uniform();
  const Eigen::MatrixXd p = w.evaluate(u, u);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform() < p(i, j)) edges.emplace_back(i, j);
    }
  }
  if (labels) *labels = std::move(u);
  return Graph::from_edges(n, edges);
}

Graph sample_graph(const Graphon& w, int n, std::uint64_t seed) {
  return sample_graph(w, n, seed, nullptr);
}

}  // namespace nm
