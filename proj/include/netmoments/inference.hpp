#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "netmoments/bootstrap.hpp"
#include "netmoments/graph.hpp"
#include "netmoments/graphon.hpp"
#include "netmoments/limit_law.hpp"
#include "netmoments/motif.hpp"

namespace nm {

// Rejects regularity when scale * R > 1, with scale = sqrt(n) unless an
// explicit sequence value is given.
struct RegularityTest {
  double r = 0.0;          // empirical regularity functional
  double scale = 0.0;
  double statistic = 0.0;  // scale * r
  bool reject = false;
};
RegularityTest regularity_test(const Graph& g, const Motif& h,
                               std::optional<double> scale = std::nullopt);

// Joint confidence set for (t(H_1,W), ..., t(H_r,W)). A candidate vector is
// inside when the norm of its rescaled deviation is at most the bootstrap
// quantile.
struct ConfidenceReport {
  std::vector<Motif> motifs;
  double alpha = 0.0;
  int n = 0;
  std::vector<bool> selected;          // regularity rejected: linear branch
  std::vector<double> point_estimates; // t_hat
  std::vector<double> statistics;      // sqrt(n) R per motif
  std::vector<double> exponents;       // k - 1/2 if selected, k - 1 otherwise
  double quantile = 0.0;

  // ||Z~(t)||_2 with Z~_i = (n)_k (t_hat_i - t_i) / (|Aut_i| n^{e_i}).
  double norm(std::span<const double> candidate) const;
  bool contains(std::span<const double> candidate) const;
};
ConfidenceReport joint_confidence_set(const Graph& g, std::span<const Motif> motifs, double alpha,
                                      std::int64_t resamples, std::uint64_t seed,
                                      std::optional<double> scale = std::nullopt);

struct MarginalInterval {
  double lower = 0.0;
  double upper = 0.0;
  double t_hat = 0.0;
  Branch branch = Branch::kLinear;
  double statistic = 0.0;  // sqrt(n) R
  bool contains(double t) const { return lower <= t && t <= upper; }
};
// Irregular branch: normal interval from the one-point densities. Regular
// branch: quantiles of the weighted chi-squared law with weights from the
// centered two-point matrix.
MarginalInterval marginal_ci(const Graph& g, const Motif& h, double alpha, std::int64_t resamples,
                             std::uint64_t seed, std::optional<double> scale = std::nullopt);

// f_hat = t_hat(K2)^4 - t_hat(C4), with the studentized statistic
// n^{3/2} f_hat / (4 sqrt(2) t^3 (1 - t)), t = t_hat(K2).
struct StructureStat {
  double f_hat = 0.0;
  double t_n = 0.0;
  double edge_density = 0.0;
  double c4_density = 0.0;
  int n = 0;
};
double structure_f_hat(const Graph& g);
// Throws DomainError for empty or complete graphs.
StructureStat structure_stat(const Graph& g);

struct StructureTestResult {
  double f_hat = 0.0;
  double t_n = 0.0;
  double z_crit = 0.0;
  bool reject = false;
  int n = 0;
};
StructureTestResult structure_test(const Graph& g, double alpha);

// Limit of f_hat under a fixed graphon, classified by regularity for K2 and C4:
// case 1 both irregular, 2 only C4 regular, 3 only K2 regular, 4 both regular.
struct StructureAlternative {
  int case_id = 0;
  bool k2_regular = false;
  bool c4_regular = false;
  double f = 0.0;  // t(K2)^4 - t(C4)
  // Building blocks in the published parametrization:
  // tau11 = t(K_{1,2}) - t(K2)^2, tau22 = (t(C4 vertex-joined with C4) - t(C4)^2) / 4,
  // tau12 = (t(C4 vertex-joined with K2) - t(C4) t(K2)) / 2.
  double tau11 = 0.0;
  double tau22 = 0.0;
  double tau12 = 0.0;
  // tau11 + tau22 - 2 tau12, tau11, or tau22 for cases 1-3; NaN in case 4.
  double tau_sq = 0.0;
  // Delta-method variance of sqrt(n)(f_hat - f) from the covariance of the
  // Gaussian limit: 64 [t^6 G11 + G22 - 2 t^3 G12] over (K2, C4).
  double delta_variance = 0.0;
  // Case 4: n (f_hat - f) converges to weights . Z with Z drawn from `limit`.
  std::optional<LimitSpec> limit;
  double weight_k2 = 0.0;
  double weight_c4 = 0.0;
};
StructureAlternative structure_alt_params(const Graphon& w, int grid = 512);

// Point estimate inj(K3) / inj(K_{1,2}) = 3 X(K3) / X(K_{1,2}).
double clustering_coefficient(const Graph& g);

}  // namespace nm
