#pragma once

#include <span>
#include <vector>

#include "netmoments/graphon.hpp"
#include "netmoments/motif.hpp"
#include "netmoments/quadrature.hpp"

namespace nm::detail {

// A vertex held at a fixed list of evaluation points instead of being
// integrated out.
struct PinnedVertex {
  int vertex;
  std::span<const double> points;
};

// Sums prod_{edges} W(x_u, x_v)^mult over the integrated vertices, each
// weighted by `rule`, and returns the resulting tensor over the pinned
// vertices in row-major order (pinned[0] slowest). With no pinned vertices the
// result has one entry: the homomorphism density.
//
// Vertices are eliminated one at a time in greedy min-size order, so the cost
// follows the treewidth of the motif rather than |rule|^k.
std::vector<double> contract(const MultiMotif& f, const Graphon& w, const QuadratureRule& rule,
                             std::span<const PinnedVertex> pinned);

}  // namespace nm::detail
