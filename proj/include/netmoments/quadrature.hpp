#pragma once

#include <span>
#include <vector>

namespace nm {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t size() const { return nodes.size(); }
};

// Gauss-Legendre rule with `order` nodes on [a, b], by Newton iteration on the
// Legendre recurrence.
QuadratureRule gauss_legendre(int order, double a = 0.0, double b = 1.0);

// Gauss-Legendre on each panel of [0,1] cut at the given interior
// breakpoints. Piecewise smooth integrands with jumps only at breakpoints are
// integrated to the smooth-panel accuracy.
QuadratureRule composite_gauss_legendre(std::span<const double> breakpoints, int order);

// Cell midpoints (i + 1/2)/m with weights 1/m.
QuadratureRule midpoint_rule(int m);
std::vector<double> grid_midpoints(int m);

}  // namespace nm
