#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "netmoments/graphon.hpp"
#include "netmoments/motif.hpp"

namespace nm {

// Motifs with regularity functional below this are treated as regular.
inline constexpr double kRegularityTol = 1e-9;

double hom_density(const MultiMotif& f, const Graphon& w);
double hom_density(const Motif& h, const Graphon& w);

// For expression graphons, evaluates at the graphon's order and at twice
// that order; converged when the relative change is below 1e-6. Block and
// empirical graphons are always exact.
struct DensityEstimate {
  double value;
  double coarse;
  bool converged;
};
DensityEstimate hom_density_checked(const MultiMotif& f, const Graphon& w);

// t_a(x): density of h with vertex a held at x.
std::vector<double> conditional_density(const Motif& h, int a, std::span<const double> xs,
                                        const Graphon& w);
double conditional_density(const Motif& h, int a, double x, const Graphon& w);

// Vertex average (1/k) sum_a t_a(x).
std::vector<double> mean_conditional_density(const Motif& h, std::span<const double> xs,
                                             const Graphon& w);

// t_{a,b}(x, y) on a product of point sets.
Eigen::MatrixXd pair_conditional_density(const Motif& h, int a, int b, std::span<const double> xs,
                                         std::span<const double> ys, const Graphon& w);

// Two-point kernel (1/(2|Aut|)) sum_{a != b} t_{a,b}(x, y) at the given points.
Eigen::MatrixXd conditional_kernel_at(const Motif& h, std::span<const double> xs, const Graphon& w);
// Same on the m cell midpoints of [0,1].
Eigen::MatrixXd conditional_kernel(const Motif& h, const Graphon& w, int m);

// Degree of the two-point kernel under regularity: k(k-1)/(2|Aut|) t(h,w).
double kernel_degree(const Motif& h, const Graphon& w);

// sum_{a,b} t(h (+)_{ab} h) - k^2 t^2; `value` is clamped at 0, `raw` is not.
struct Regularity {
  double value;
  double raw;
};
Regularity regularity(const Motif& h, const Graphon& w);
bool is_regular(const Motif& h, const Graphon& w, double tol = kRegularityTol);

// g(x) = (1/|Aut|) sum_a t_a(x) - (k/|Aut|) t: the influence function of the
// normalized count, i.e. the integrand of the Gaussian limit for irregular motifs.
std::vector<double> linear_kernel(const Motif& h, std::span<const double> xs, const Graphon& w);

struct CovMatrix {
  std::vector<Motif> labels;
  Eigen::MatrixXd entries;
};

// Gaussian-block covariance for regular motifs:
// (1/(2|Aut_i||Aut_j|)) sum over ordered edge pairs of t(weak join) - t(strong join).
CovMatrix sigma_matrix(std::span<const Motif> motifs, const Graphon& w);

// Covariance of the Gaussian limit for irregular motifs:
// (1/(|Aut_i||Aut_j|)) [sum_{a,b} t(H_i (+)_{ab} H_j) - k_i k_j t_i t_j].
CovMatrix gamma_matrix(std::span<const Motif> motifs, const Graphon& w);

}  // namespace nm
