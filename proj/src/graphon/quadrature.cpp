#include "netmoments/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "netmoments/error.hpp"

namespace nm {

QuadratureRule gauss_legendre(int order, double a, double b) {
  if (order < 1) throw DomainError("quadrature order must be positive");
  QuadratureRule r;
  r.nodes.resize(order);
  r.weights.resize(order);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 1; j <= order; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = order * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0, p1 = 0.0;
    for (int j = 1; j <= order; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
    }
    dp = order * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    r.nodes[i] = mid - half * z;
    r.nodes[order - 1 - i] = mid + half * z;
    r.weights[i] = half * w;
    r.weights[order - 1 - i] = half * w;
  }
  return r;
}

QuadratureRule composite_gauss_legendre(std::span<const double> breakpoints, int order) {
  std::vector<double> cuts{0.0};
  std::vector<double> inner(breakpoints.begin(), breakpoints.end());
  std::sort(inner.begin(), inner.end());
  for (double b : inner) {
    if (b <= 0.0 || b >= 1.0) throw DomainError("breakpoints must lie strictly inside (0, 1)");
    if (b > cuts.back()) cuts.push_back(b);
  }
  cuts.push_back(1.0);
  QuadratureRule out;
  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    auto panel = gauss_legendre(order, cuts[p], cuts[p + 1]);
    out.nodes.insert(out.nodes.end(), panel.nodes.begin(), panel.nodes.end());
    out.weights.insert(out.weights.end(), panel.weights.begin(), panel.weights.end());
  }
  return out;
}

std::vector<double> grid_midpoints(int m) {
  if (m < 1) throw DomainError("grid size must be positive");
  std::vector<double> x(m);
  for (int i = 0; i < m; ++i) x[i] = (i + 0.5) / m;
  return x;
}

QuadratureRule midpoint_rule(int m) {
  QuadratureRule r;
  r.nodes = grid_midpoints(m);
  r.weights.assign(m, 1.0 / m);
  return r;
}

}  // namespace nm
