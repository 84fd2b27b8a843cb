#include "netmoments/density.hpp"

#include <algorithm>
#include <cmath>

#include "graphon/contraction.hpp"
#include "motifs/orbits.hpp"
#include "netmoments/error.hpp"

namespace nm {

using detail::contract;
using detail::PinnedVertex;

double hom_density(const MultiMotif& f, const Graphon& w) {
  return contract(f, w, w.quadrature(), {})[0];
}

double hom_density(const Motif& h, const Graphon& w) { return hom_density(MultiMotif(h), w); }

DensityEstimate hom_density_checked(const MultiMotif& f, const Graphon& w) {
  const double coarse = contract(f, w, w.quadrature(), {})[0];
  if (w.exact_quadrature()) return {coarse, coarse, true};
  const double fine = contract(f, w, w.quadrature(2), {})[0];
  const double scale = std::max(std::abs(fine), 1e-300);
  return {fine, coarse, std::abs(fine - coarse) <= 1e-6 * scale};
}

std::vector<double> conditional_density(const Motif& h, int a, std::span<const double> xs,
                                        const Graphon& w) {
  if (a < 0 || a >= h.num_vertices()) throw DomainError("invalid vertex for conditional density");
  const PinnedVertex pin{a, xs};
  return contract(MultiMotif(h), w, w.quadrature(), std::span(&pin, 1));
}

double conditional_density(const Motif& h, int a, double x, const Graphon& w) {
  return conditional_density(h, a, std::span<const double>(&x, 1), w)[0];
}

namespace {

// sum_a t_a(x) using one evaluation per vertex orbit.
std::vector<double> summed_conditional_density(const Motif& h, std::span<const double> xs,
                                               const Graphon& w) {
  std::vector<double> total(xs.size(), 0.0);
  for (const auto& [rep, count] : detail::vertex_orbit_reps(h)) {
    const auto t = conditional_density(h, rep, xs, w);
    for (std::size_t i = 0; i < xs.size(); ++i) total[i] += count * t[i];
  }
  return total;
}

}  // namespace

std::vector<double> mean_conditional_density(const Motif& h, std::span<const double> xs,
                                             const Graphon& w) {
  auto total = summed_conditional_density(h, xs, w);
  for (double& v : total) v /= h.num_vertices();
  return total;
}

std::vector<double> linear_kernel(const Motif& h, std::span<const double> xs, const Graphon& w) {
  const double aut = static_cast<double>(h.automorphisms());
  const double t = hom_density(h, w);
  auto g = summed_conditional_density(h, xs, w);
  for (double& v : g) v = v / aut - h.num_vertices() * t / aut;
  return g;
}

Eigen::MatrixXd pair_conditional_density(const Motif& h, int a, int b, std::span<const double> xs,
                                         std::span<const double> ys, const Graphon& w) {
  if (a < 0 || b < 0 || a >= h.num_vertices() || b >= h.num_vertices() || a == b) {
    throw DomainError("pair conditional density needs two distinct valid vertices");
  }
  const PinnedVertex pins[2] = {{a, xs}, {b, ys}};
  const auto data = contract(MultiMotif(h), w, w.quadrature(), pins);
  return Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      data.data(), static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(ys.size()));
}

Eigen::MatrixXd conditional_kernel_at(const Motif& h, std::span<const double> xs, const Graphon& w) {
  const auto m = static_cast<Eigen::Index>(xs.size());
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(m, m);
  for (const auto& [pair, count] : detail::unordered_pair_orbit_reps(h)) {
    const Eigen::MatrixXd t = pair_conditional_density(h, pair.first, pair.second, xs, xs, w);
    sum += count * (t + t.transpose());
  }
  return sum / (2.0 * static_cast<double>(h.automorphisms()));
}

Eigen::MatrixXd conditional_kernel(const Motif& h, const Graphon& w, int m) {
  if (m < 2) throw DomainError("kernel grid needs at least 2 points");
  const auto xs = grid_midpoints(m);
  return conditional_kernel_at(h, xs, w);
}

double kernel_degree(const Motif& h, const Graphon& w) {
  const double k = h.num_vertices();
  return k * (k - 1.0) / (2.0 * static_cast<double>(h.automorphisms())) * hom_density(h, w);
}

namespace {

// sum_{a in V(h1), b in V(h2)} t(h1 (+)_{ab} h2).
double vertex_join_sum(const Motif& h1, const Motif& h2, const Graphon& w) {
  double s = 0.0;
  for (const auto& [a, ca] : detail::vertex_orbit_reps(h1)) {
    for (const auto& [b, cb] : detail::vertex_orbit_reps(h2)) {
      s += ca * cb * hom_density(vertex_join(h1, a, h2, b), w);
    }
  }
  return s;
}

}  // namespace

Regularity regularity(const Motif& h, const Graphon& w) {
  const double k = h.num_vertices();
  const double t = hom_density(h, w);
  const double raw = vertex_join_sum(h, h, w) - k * k * t * t;
  return {std::max(raw, 0.0), raw};
}

bool is_regular(const Motif& h, const Graphon& w, double tol) { return regularity(h, w).value < tol; }

CovMatrix gamma_matrix(std::span<const Motif> motifs, const Graphon& w) {
  if (motifs.empty()) throw DomainError("gamma_matrix needs at least one motif");
  const auto r = static_cast<Eigen::Index>(motifs.size());
  std::vector<double> t(r);
  for (Eigen::Index i = 0; i < r; ++i) t[i] = hom_density(motifs[i], w);
  Eigen::MatrixXd g(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = i; j < r; ++j) {
      const Motif& hi = motifs[i];
      const Motif& hj = motifs[j];
      const double raw = vertex_join_sum(hi, hj, w) -
                         static_cast<double>(hi.num_vertices()) * hj.num_vertices() * t[i] * t[j];
      const double v = raw / (static_cast<double>(hi.automorphisms()) * hj.automorphisms());
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return {std::vector<Motif>(motifs.begin(), motifs.end()), g};
}

CovMatrix sigma_matrix(std::span<const Motif> motifs, const Graphon& w) {
  if (motifs.empty()) throw DomainError("sigma_matrix needs at least one motif");
  const auto r = static_cast<Eigen::Index>(motifs.size());
  Eigen::MatrixXd s(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = i; j < r; ++j) {
      const Motif& hi = motifs[i];
      const Motif& hj = motifs[j];
      double sum = 0.0;
      for (const auto& [ab, cab] : detail::ordered_edge_orbit_reps(hi)) {
        for (const auto& [cd, ccd] : detail::ordered_edge_orbit_reps(hj)) {
          const double weak = hom_density(edge_join(hi, ab, hj, cd, JoinMode::kWeak), w);
          const double strong = hom_density(edge_join(hi, ab, hj, cd, JoinMode::kStrong), w);
          sum += cab * ccd * (weak - strong);
        }
      }
      const double v =
          sum / (2.0 * static_cast<double>(hi.automorphisms()) * hj.automorphisms());
      s(i, j) = v;
      s(j, i) = v;
    }
  }
  return {std::vector<Motif>(motifs.begin(), motifs.end()), s};
}

}  // namespace nm
