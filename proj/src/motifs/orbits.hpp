#pragma once

#include <utility>
#include <vector>

#include "netmoments/motif.hpp"

namespace nm::detail {

// Orbit representatives under Aut(h) with orbit sizes. Sums over vertices,
// vertex pairs, or ordered edges of quantities invariant under relabeling by
// automorphisms can be taken over representatives only.
std::vector<std::pair<int, int>> vertex_orbit_reps(const Motif& h);
std::vector<std::pair<OrderedPair, int>> unordered_pair_orbit_reps(const Motif& h);
std::vector<std::pair<OrderedPair, int>> ordered_edge_orbit_reps(const Motif& h);

}  // namespace nm::detail
