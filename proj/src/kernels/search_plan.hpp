#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "netmoments/graph.hpp"
#include "netmoments/motif.hpp"

namespace nm::detail {

// Order in which motif vertices are mapped: each next vertex has the most
// already-mapped neighbors, so candidate sets shrink as early as possible.
struct SearchPlan {
  std::vector<int> order;                   // position -> motif vertex
  std::vector<std::vector<int>> back_edges;  // position -> earlier adjacent positions
};

SearchPlan make_search_plan(const Motif& h);

// Depth-first enumeration of injective homomorphisms whose first mapped
// vertex is `root`. `leaf(images)` receives images indexed by motif vertex.
// With count_only set, the last level is popcounted instead of enumerated and
// `on_count(images, c)` receives the number of completions.
class InjectiveSearch {
 public:
  InjectiveSearch(const Motif& h, const Graph& g);

  template <typename Leaf>
  void enumerate(int root, Leaf&& leaf);

  std::int64_t count_from(int root);

 private:
  void candidates(int pos, std::uint64_t* out) const;

  const Graph& g_;
  SearchPlan plan_;
  int k_;
  int words_;
  std::vector<int> images_;         // by motif vertex
  std::vector<std::uint64_t> used_;
  std::vector<std::uint64_t> cand_;  // k_ * words_ scratch
};

template <typename Leaf>
void InjectiveSearch::enumerate(int root, Leaf&& leaf) {
  const int first = plan_.order[0];
  images_[first] = root;
  used_[root >> 6] |= std::uint64_t{1} << (root & 63);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == k_) {
      leaf(images_);
      return;
    }
    std::uint64_t* c = cand_.data() + static_cast<std::size_t>(pos) * words_;
    candidates(pos, c);
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
  rec(rec, 1);
  used_[root >> 6] &= ~(std::uint64_t{1} << (root & 63));
}

}  // namespace nm::detail
