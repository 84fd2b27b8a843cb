#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "netmoments/graph.hpp"
#include "netmoments/kernels.hpp"
#include "netmoments/motif.hpp"

namespace nm::detail {

enum class Shape { kEdge, kTwoStar, kTriangle, kFourCycle, kBowtie, kOther };

// Canonical labelings: edge 0-1; two-star centered at 0; triangle; four-cycle
// 0-1-2-3-0; bowtie with triangles 0-1-2 and 0-3-4.
struct ShapeMatch {
  Shape shape = Shape::kOther;
  std::vector<int> to_canonical;  // motif vertex -> canonical vertex
};
ShapeMatch match_shape(const Motif& h);

bool has_rooted_closed_form(Shape s);

std::int64_t closed_form_injective(Shape s, const Graph& g, const CountMatrix& common);

// X_a(v) indexed by canonical vertex a.
std::vector<std::vector<std::int64_t>> closed_form_rooted(Shape s, const Graph& g,
                                                          const CountMatrix& common);

// sum_{a != b} X_{a,b}(u,v) with zero diagonal.
Eigen::MatrixXd closed_form_pair_sum(Shape s, const Graph& g, const CountMatrix& common);

}  // namespace nm::detail
