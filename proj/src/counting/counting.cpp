#include "netmoments/counting.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "counting/closed_forms.hpp"
#include "motifs/orbits.hpp"
#include "netmoments/error.hpp"

namespace nm {
namespace {

void require_fits(const Motif& h, const Graph& g) {
  if (g.num_vertices() < h.num_vertices()) {
    throw SizeError("graph with " + std::to_string(g.num_vertices()) +
                    " vertices is too small for a motif with " + std::to_string(h.num_vertices()) +
                    " vertices");
  }
}

}  // namespace

double falling_factorial(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= static_cast<double>(n - i);
  return r;
}

std::int64_t count_injective(const Motif& h, const Graph& g) {
  require_fits(h, g);
  const auto match = detail::match_shape(h);
  if (match.shape == detail::Shape::kOther) return kernels::count_injective(h, g);
  if (match.shape == detail::Shape::kEdge) return 2 * g.num_edges();
  return detail::closed_form_injective(match.shape, g, kernels::common_neighbors(g));
}

std::int64_t count_copies(const Motif& h, const Graph& g) {
  return count_injective(h, g) / h.automorphisms();
}

double density_hat(const Motif& h, const Graph& g) {
  return static_cast<double>(count_injective(h, g)) / falling_factorial(g.num_vertices(), h.num_vertices());
}

OnePointDensity one_point_density(const Motif& h, const Graph& g) {
  require_fits(h, g);
  const int n = g.num_vertices();
  const int k = h.num_vertices();
  OnePointDensity out;
  const auto match = detail::match_shape(h);
  if (detail::has_rooted_closed_form(match.shape)) {
    const auto canon = detail::closed_form_rooted(match.shape, g, kernels::common_neighbors(g));
    out.raw.by_vertex.resize(k);
    for (int a = 0; a < k; ++a) out.raw.by_vertex[a] = canon[match.to_canonical[a]];
  } else {
    out.raw = kernels::rooted_injective(h, g);
  }
  const double scale = static_cast<double>(h.automorphisms()) * std::pow(static_cast<double>(n), k - 1);
  out.t_hat = Eigen::VectorXd::Zero(n);
  for (int a = 0; a < k; ++a)
    for (int v = 0; v < n; ++v) out.t_hat(v) += static_cast<double>(out.raw.by_vertex[a][v]);
  out.t_hat /= scale;
  return out;
}

Eigen::MatrixXd two_point_matrix(const Motif& h, const Graph& g) {
  require_fits(h, g);
  const int n = g.num_vertices();
  const int k = h.num_vertices();
  const auto match = detail::match_shape(h);
  Eigen::MatrixXd s = detail::has_rooted_closed_form(match.shape)
                          ? detail::closed_form_pair_sum(match.shape, g, kernels::common_neighbors(g))
                          : kernels::pair_injective(h, g);
  s.diagonal().setZero();
  return s / (2.0 * static_cast<double>(h.automorphisms()) * std::pow(static_cast<double>(n), k - 2));
}

Graphon empirical_graphon(const Graph& g) { return Graphon::empirical(g); }

double regularity_empirical(const Motif& h, const Graph& g) {
  const int k = h.num_vertices();
  const int n = g.num_vertices();
  if (n < 2 * k - 1) {
    throw SizeError("regularity statistic needs at least " + std::to_string(2 * k - 1) +
                    " vertices, graph has " + std::to_string(n));
  }
  const double t = density_hat(h, g);
  const double denom = falling_factorial(n, 2 * k - 1);
  double joins = 0.0;
  // Joins at (a,b) and (b,a) are isomorphic, and automorphisms of h move
  // (a,b) within an orbit without changing the count.
  const auto reps = detail::vertex_orbit_reps(h);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i; j < reps.size(); ++j) {
      const auto [a, ca] = reps[i];
      const auto [b, cb] = reps[j];
      const double mult = (i == j) ? ca * cb : 2.0 * ca * cb;
      const Motif join = vertex_join(h, a, h, b);
      joins += mult * static_cast<double>(count_injective(join, g)) / denom;
    }
  }
  return joins - static_cast<double>(k) * k * t * t;
}

}  // namespace nm
