#include "counting/closed_forms.hpp"

#include "netmoments/error.hpp"

namespace nm::detail {
namespace {

// Triangles through v: half the common-neighbor sum over its neighbors.
std::vector<std::int64_t> triangles_at(const Graph& g, const CountMatrix& c) {
  std::vector<std::int64_t> tri(g.num_vertices(), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::int64_t s = 0;
    for (int u : g.neighbors(v)) s += c(u, v);
    tri[v] = s / 2;
  }
  return tri;
}

}  // namespace

ShapeMatch match_shape(const Motif& h) {
  if (h.num_vertices() > kMaxMotifVertices) return {};
  const std::pair<Shape, Motif> shapes[] = {
      {Shape::kEdge, edge_motif()},           {Shape::kTwoStar, two_star_motif()},
      {Shape::kTriangle, triangle_motif()},   {Shape::kFourCycle, four_cycle_motif()},
      {Shape::kBowtie, bowtie_motif()},
  };
  for (const auto& [shape, canon] : shapes) {
    if (auto iso = find_isomorphism(h, canon)) return {shape, *iso};
  }
  return {};
}

bool has_rooted_closed_form(Shape s) {
  return s == Shape::kEdge || s == Shape::kTwoStar || s == Shape::kTriangle ||
         s == Shape::kFourCycle;
}

std::int64_t closed_form_injective(Shape s, const Graph& g, const CountMatrix& c) {
  const int n = g.num_vertices();
  std::int64_t total = 0;
  switch (s) {
    case Shape::kEdge:
      return 2 * g.num_edges();
    case Shape::kTwoStar:
      for (int v = 0; v < n; ++v) total += static_cast<std::int64_t>(g.degree(v)) * (g.degree(v) - 1);
      return total;
    case Shape::kTriangle:
      for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) total += c(u, v);
      return total;
    case Shape::kFourCycle:
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (u != v) total += c(u, v) * (c(u, v) - 1);
      return total;
    case Shape::kBowtie: {
      // Ordered pairs of triangles at v meeting only in v, times 2 * 2
      // labelings of the two wings.
      const auto tri = triangles_at(g, c);
      for (int v = 0; v < n; ++v) {
        std::int64_t p = tri[v] * (tri[v] - 1);
        for (int u : g.neighbors(v)) p -= c(u, v) * (c(u, v) - 1);
        total += 4 * p;
      }
      return total;
    }
    case Shape::kOther:
      break;
  }
  throw DomainError("no closed form for this motif");
}

std::vector<std::vector<std::int64_t>> closed_form_rooted(Shape s, const Graph& g,
                                                          const CountMatrix& c) {
  const int n = g.num_vertices();
  std::vector<std::int64_t> x(n, 0);
  switch (s) {
    case Shape::kEdge:
      for (int v = 0; v < n; ++v) x[v] = g.degree(v);
      return {x, x};
    case Shape::kTwoStar: {
      std::vector<std::int64_t> leaf(n, 0);
      for (int v = 0; v < n; ++v) {
        const std::int64_t d = g.degree(v);
        x[v] = d * (d - 1);
        for (int s2 : g.neighbors(v)) leaf[v] += g.degree(s2) - 1;
      }
      return {x, leaf, leaf};
    }
    case Shape::kTriangle:
      for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) x[v] += c(u, v);
      return {x, x, x};
    case Shape::kFourCycle:
      for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
          if (u != v) x[v] += c(u, v) * (c(u, v) - 1);
      return {x, x, x, x};
    default:
      break;
  }
  throw DomainError("no rooted closed form for this motif");
}

Eigen::MatrixXd closed_form_pair_sum(Shape s, const Graph& g, const CountMatrix& c) {
  const int n = g.num_vertices();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  switch (s) {
    case Shape::kEdge:
      for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) out(u, v) = 2.0;
      return out;
    case Shape::kTwoStar:
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          if (u == v) continue;
          const double w = g.adjacent(u, v) ? 1.0 : 0.0;
          out(u, v) = 2.0 * (w * (g.degree(u) + g.degree(v) - 2) + static_cast<double>(c(u, v)));
        }
      return out;
    case Shape::kTriangle:
      for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) out(u, v) = 6.0 * static_cast<double>(c(u, v));
      return out;
    case Shape::kFourCycle: {
      const CountMatrix w3 = kernels::walks3(g, c);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          if (u == v) continue;
          const double cc = static_cast<double>(c(u, v));
          double x = 4.0 * cc * (cc - 1.0);
          if (g.adjacent(u, v)) {
            x += 8.0 * static_cast<double>(w3(u, v) - g.degree(u) - g.degree(v) + 1);
          }
          out(u, v) = x;
        }
      return out;
    }
    default:
      break;
  }
  throw DomainError("no two-point closed form for this motif");
}

}  // namespace nm::detail
