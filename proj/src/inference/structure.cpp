#include <cmath>
#include <limits>
#include <numbers>

#include "netmoments/counting.hpp"
#include "netmoments/density.hpp"
#include "netmoments/error.hpp"
#include "netmoments/inference.hpp"
#include "netmoments/stats.hpp"

namespace nm {
namespace {

void require_four(const Graph& g) {
  if (g.num_vertices() < 4) throw SizeError("structure statistic needs at least 4 vertices");
}

}  // namespace

double structure_f_hat(const Graph& g) {
  require_four(g);
  const double t = density_hat(Motif::complete(2), g);
  return std::pow(t, 4) - density_hat(Motif::cycle(4), g);
}

StructureStat structure_stat(const Graph& g) {
  require_four(g);
  StructureStat s;
  s.n = g.num_vertices();
  s.edge_density = density_hat(Motif::complete(2), g);
  s.c4_density = density_hat(Motif::cycle(4), g);
  s.f_hat = std::pow(s.edge_density, 4) - s.c4_density;
  const double t = s.edge_density;
  if (t <= 0.0 || t >= 1.0) {
    throw DomainError("structure statistic is undefined for an empty or complete graph");
  }
  const double n = s.n;
  s.t_n = std::pow(n, 1.5) * s.f_hat / (4.0 * std::numbers::sqrt2 * t * t * t * (1.0 - t));
  return s;
}

StructureTestResult structure_test(const Graph& g, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  const StructureStat s = structure_stat(g);
  StructureTestResult r;
  r.f_hat = s.f_hat;
  r.t_n = s.t_n;
  r.n = s.n;
  r.z_crit = normal_quantile(1.0 - alpha / 2.0);
  r.reject = std::abs(r.t_n) > r.z_crit;
  return r;
}

StructureAlternative structure_alt_params(const Graphon& w, int grid) {
  const Motif k2 = Motif::complete(2);
  const Motif c4 = Motif::cycle(4);
  StructureAlternative a;
  a.k2_regular = is_regular(k2, w);
  a.c4_regular = is_regular(c4, w);
  a.case_id = a.k2_regular ? (a.c4_regular ? 4 : 3) : (a.c4_regular ? 2 : 1);

  const double t = hom_density(k2, w);
  const double tc = hom_density(c4, w);
  a.f = std::pow(t, 4) - tc;
  a.tau11 = hom_density(Motif::star(2), w) - t * t;
  a.tau22 = 0.25 * (hom_density(vertex_join(c4, 0, c4, 0), w) - tc * tc);
  a.tau12 = 0.5 * (hom_density(vertex_join(c4, 0, k2, 0), w) - tc * t);

  const Motif pair[2] = {k2, c4};
  const Eigen::MatrixXd gam = gamma_matrix(pair, w).entries;
  const double t3 = t * t * t;
  a.delta_variance = 64.0 * (t3 * t3 * gam(0, 0) + gam(1, 1) - 2.0 * t3 * gam(0, 1));

  switch (a.case_id) {
    case 1: a.tau_sq = a.tau11 + a.tau22 - 2.0 * a.tau12; break;
    case 2: a.tau_sq = a.tau11; break;
    case 3: a.tau_sq = a.tau22; break;
    default:
      a.tau_sq = std::numeric_limits<double>::quiet_NaN();
      a.limit = make_limit_spec({k2, c4}, {true, true}, w, grid);
      // n (t_hat - t) ~ |Aut| Z for each motif, then the delta method.
      a.weight_k2 = 4.0 * t3 * k2.automorphisms();
      a.weight_c4 = -1.0 * c4.automorphisms();
      break;
  }
  return a;
}

double clustering_coefficient(const Graph& g) {
  const auto wedges = count_injective(Motif::star(2), g);
  if (wedges == 0) throw DomainError("clustering coefficient is undefined without two-paths");
  return static_cast<double>(count_injective(Motif::complete(3), g)) / static_cast<double>(wedges);
}

}  // namespace nm
