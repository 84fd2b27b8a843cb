#include <cmath>
#include <string>

#include "kernels/search_plan.hpp"
#include "netmoments/error.hpp"
#include "netmoments/kernels.hpp"

namespace nm {
namespace detail {

SearchPlan make_search_plan(const Motif& h) {
  const int k = h.num_vertices();
  SearchPlan plan;
  std::vector<bool> placed(k, false);
  std::vector<int> position(k, -1);
  for (int pos = 0; pos < k; ++pos) {
    int best = -1, best_links = -1, best_deg = -1;
    for (int v = 0; v < k; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int u = 0; u < k; ++u)
        if (placed[u] && h.has_edge(u, v)) ++links;
      if (links > best_links || (links == best_links && h.degree(v) > best_deg)) {
        best = v;
        best_links = links;
        best_deg = h.degree(v);
      }
    }
    placed[best] = true;
    position[best] = pos;
    plan.order.push_back(best);
    std::vector<int> back;
    for (int u = 0; u < k; ++u)
      if (u != best && position[u] >= 0 && h.has_edge(u, best)) back.push_back(position[u]);
    plan.back_edges.push_back(std::move(back));
  }
  return plan;
}

InjectiveSearch::InjectiveSearch(const Motif& h, const Graph& g)
    : g_(g),
      plan_(make_search_plan(h)),
      k_(h.num_vertices()),
      words_(g.words_per_row()),
      images_(h.num_vertices(), -1),
      used_(g.words_per_row(), 0),
      cand_(static_cast<std::size_t>(h.num_vertices()) * g.words_per_row(), 0) {}

void InjectiveSearch::candidates(int pos, std::uint64_t* out) const {
  const auto& back = plan_.back_edges[pos];
  if (back.empty()) {
    const int n = g_.num_vertices();
    for (int w = 0; w < words_; ++w) out[w] = ~std::uint64_t{0};
    if (n & 63) out[words_ - 1] = (std::uint64_t{1} << (n & 63)) - 1;
  } else {
    const std::uint64_t* r0 = g_.row(images_[plan_.order[back[0]]]);
    for (int w = 0; w < words_; ++w) out[w] = r0[w];
    for (std::size_t b = 1; b < back.size(); ++b) {
      const std::uint64_t* r = g_.row(images_[plan_.order[back[b]]]);
      for (int w = 0; w < words_; ++w) out[w] &= r[w];
    }
  }
  for (int w = 0; w < words_; ++w) out[w] &= ~used_[w];
}

std::int64_t InjectiveSearch::count_from(int root) {
  std::int64_t total = 0;
  const int first = plan_.order[0];
  images_[first] = root;
  used_[root >> 6] |= std::uint64_t{1} << (root & 63);
  auto rec = [&](auto&& self, int pos) -> void {
    std::uint64_t* c = cand_.data() + static_cast<std::size_t>(pos) * words_;
    candidates(pos, c);
    if (pos == k_ - 1) {
      for (int w = 0; w < words_; ++w) total += std::popcount(c[w]);
      return;
    }
    const int hv = plan_.order[pos];
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = c[w];
      while (bits) {
        const int v = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        images_[hv] = v;
        used_[w] |= std::uint64_t{1} << (v & 63);
        self(self, pos + 1);
        used_[w] &= ~(std::uint64_t{1} << (v & 63));
      }
    }
  };
  if (k_ == 1) {
    total = 1;
  } else {
    rec(rec, 1);
  }
  used_[root >> 6] &= ~(std::uint64_t{1} << (root & 63));
  return total;
}

void check_count_range(const Motif& h, const Graph& g) {
  const int n = g.num_vertices();
  const int k = h.num_vertices();
  if (n < k) {
    throw SizeError("graph with " + std::to_string(n) + " vertices is too small for a motif with " +
                    std::to_string(k) + " vertices");
  }
  long double ff = 1.0L;
  for (int i = 0; i < k; ++i) ff *= static_cast<long double>(n - i);
  if (ff >= 9.0e18L) throw SizeError("injective map count may overflow 64-bit integers");
}

}  // namespace detail

namespace kernels {

std::int64_t count_injective(const Motif& h, const Graph& g) {
  detail::check_count_range(h, g);
  const int n = g.num_vertices();
  std::int64_t total = 0;
#pragma omp parallel reduction(+ : total)
  {
    detail::InjectiveSearch search(h, g);
#pragma omp for schedule(dynamic, 4)
    for (int v = 0; v < n; ++v) total += search.count_from(v);
  }
  return total;
}

RootedCounts rooted_injective(const Motif& h, const Graph& g) {
  detail::check_count_range(h, g);
  const int n = g.num_vertices();
  const int k = h.num_vertices();
  RootedCounts out;
  out.by_vertex.assign(k, std::vector<std::int64_t>(n, 0));
#pragma omp parallel
  {
    detail::InjectiveSearch search(h, g);
    std::vector<std::vector<std::int64_t>> local(k, std::vector<std::int64_t>(n, 0));
#pragma omp for schedule(dynamic, 4) nowait
    for (int v = 0; v < n; ++v) {
      search.enumerate(v, [&](const std::vector<int>& img) {
        for (int a = 0; a < k; ++a) ++local[a][img[a]];
      });
    }
#pragma omp critical
    for (int a = 0; a < k; ++a)
      for (int v = 0; v < n; ++v) out.by_vertex[a][v] += local[a][v];
  }
  return out;
}

Eigen::MatrixXd pair_injective(const Motif& h, const Graph& g) {
  detail::check_count_range(h, g);
  const int n = g.num_vertices();
  const int k = h.num_vertices();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
#pragma omp parallel
  {
    detail::InjectiveSearch search(h, g);
    // Integer accumulation keeps the result independent of thread count.
    std::vector<std::int64_t> local(static_cast<std::size_t>(n) * n, 0);
#pragma omp for schedule(dynamic, 4) nowait
    for (int v = 0; v < n; ++v) {
      search.enumerate(v, [&](const std::vector<int>& img) {
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b)
            if (a != b) ++local[static_cast<std::size_t>(img[a]) * n + img[b]];
      });
    }
#pragma omp critical
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) out(u, v) += static_cast<double>(local[static_cast<std::size_t>(u) * n + v]);
  }
  return out;
}

}  // namespace kernels
}  // namespace nm
