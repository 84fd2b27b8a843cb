#include "motifs/orbits.hpp"

#include <algorithm>
#include <map>

namespace nm::detail {
namespace {

// Groups `items` by the lexicographically smallest image under the group.
template <typename Item, typename Apply>
std::vector<std::pair<Item, int>> orbit_reps(const std::vector<Item>& items,
                                             const std::vector<std::vector<int>>& group,
                                             Apply&& apply) {
  std::map<Item, int> counts;
  std::map<Item, Item> first_member;
  for (const auto& it : items) {
    Item canon = it;
    for (const auto& p : group) canon = std::min(canon, apply(p, it));
    if (counts[canon]++ == 0) first_member[canon] = it;
  }
  std::vector<std::pair<Item, int>> out;
  for (const auto& [canon, c] : counts) out.emplace_back(first_member[canon], c);
  return out;
}

}  // namespace

std::vector<std::pair<int, int>> vertex_orbit_reps(const Motif& h) {
  std::vector<int> items(h.num_vertices());
  for (int i = 0; i < h.num_vertices(); ++i) items[i] = i;
  return orbit_reps(items, automorphism_group(h),
                    [](const std::vector<int>& p, int v) { return p[v]; });
}

std::vector<std::pair<OrderedPair, int>> unordered_pair_orbit_reps(const Motif& h) {
  std::vector<OrderedPair> items;
  for (int a = 0; a < h.num_vertices(); ++a)
    for (int b = a + 1; b < h.num_vertices(); ++b) items.emplace_back(a, b);
  return orbit_reps(items, automorphism_group(h), [](const std::vector<int>& p, OrderedPair e) {
    return OrderedPair{std::min(p[e.first], p[e.second]), std::max(p[e.first], p[e.second])};
  });
}

std::vector<std::pair<OrderedPair, int>> ordered_edge_orbit_reps(const Motif& h) {
  return orbit_reps(h.ordered_edges(), automorphism_group(h),
                    [](const std::vector<int>& p, OrderedPair e) {
                      return OrderedPair{p[e.first], p[e.second]};
                    });
}

}  // namespace nm::detail
