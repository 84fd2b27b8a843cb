#include "netmoments/kernels.hpp"

namespace nm::reference {

CountMatrix common_neighbors(const Graph& g) {
  const int n = g.num_vertices();
  CountMatrix c{n, std::vector<std::int64_t>(static_cast<std::size_t>(n) * n, 0)};
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int s = 0; s < n; ++s)
        if (g.adjacent(u, s) && g.adjacent(s, v)) ++c(u, v);
  return c;
}

CountMatrix walks3(const Graph& g) {
  const int n = g.num_vertices();
  CountMatrix c{n, std::vector<std::int64_t>(static_cast<std::size_t>(n) * n, 0)};
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int s = 0; s < n; ++s) {
        if (!g.adjacent(u, s)) continue;
        for (int t = 0; t < n; ++t)
          if (g.adjacent(s, t) && g.adjacent(t, v)) ++c(u, v);
      }
  return c;
}

}  // namespace nm::reference
