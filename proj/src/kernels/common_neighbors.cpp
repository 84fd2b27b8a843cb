#include <bit>

#include "netmoments/kernels.hpp"

namespace nm::kernels {

CountMatrix common_neighbors(const Graph& g) {
  const int n = g.num_vertices();
  const int words = g.words_per_row();
  CountMatrix c{n, std::vector<std::int64_t>(static_cast<std::size_t>(n) * n, 0)};
#pragma omp parallel for schedule(dynamic, 8)
  for (int u = 0; u < n; ++u) {
    const std::uint64_t* ru = g.row(u);
    c(u, u) = g.degree(u);
    for (int v = u + 1; v < n; ++v) {
      const std::uint64_t* rv = g.row(v);
      std::int64_t s = 0;
      for (int w = 0; w < words; ++w) s += std::popcount(ru[w] & rv[w]);
      c(u, v) = s;
      c(v, u) = s;
    }
  }
  return c;
}

CountMatrix walks3(const Graph& g, const CountMatrix& common) {
  const int n = g.num_vertices();
  CountMatrix out{n, std::vector<std::int64_t>(static_cast<std::size_t>(n) * n, 0)};
#pragma omp parallel for schedule(dynamic, 8)
  for (int u = 0; u < n; ++u) {
    std::int64_t* row = out.data.data() + static_cast<std::size_t>(u) * n;
    for (int s : g.neighbors(u)) {
      const std::int64_t* cs = common.data.data() + static_cast<std::size_t>(s) * n;
      for (int v = 0; v < n; ++v) row[v] += cs[v];
    }
  }
  return out;
}

}  // namespace nm::kernels
