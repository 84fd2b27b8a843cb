#include <string>

#include "netmoments/error.hpp"
#include "netmoments/kernels.hpp"

namespace nm::reference {
namespace {

// Plain depth-first search over vertex tuples in motif label order, checking
// every motif edge to an earlier label by adjacency lookup.
template <typename Leaf>
void enumerate(const Motif& h, const Graph& g, Leaf&& leaf) {
  const int k = h.num_vertices();
  const int n = g.num_vertices();
  if (n < k) throw SizeError("graph too small for motif");
  std::vector<int> img(k, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int a) -> void {
    if (a == k) {
      leaf(img);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int b = 0; b < a && ok; ++b)
        if (h.has_edge(a, b) && !g.adjacent(v, img[b])) ok = false;
      if (!ok) continue;
      img[a] = v;
      used[v] = 1;
      self(self, a + 1);
      used[v] = 0;
    }
  };
  rec(rec, 0);
}

}  // namespace

std::int64_t count_injective(const Motif& h, const Graph& g) {
  std::int64_t total = 0;
  enumerate(h, g, [&](const std::vector<int>&) { ++total; });
  return total;
}

RootedCounts rooted_injective(const Motif& h, const Graph& g) {
  const int k = h.num_vertices();
  RootedCounts out;
  out.by_vertex.assign(k, std::vector<std::int64_t>(g.num_vertices(), 0));
  enumerate(h, g, [&](const std::vector<int>& img) {
    for (int a = 0; a < k; ++a) ++out.by_vertex[a][img[a]];
  });
  return out;
}

Eigen::MatrixXd pair_injective(const Motif& h, const Graph& g) {
  const int k = h.num_vertices();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(g.num_vertices(), g.num_vertices());
  enumerate(h, g, [&](const std::vector<int>& img) {
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (a != b) out(img[a], img[b]) += 1.0;
  });
  return out;
}

}  // namespace nm::reference
