#include <cmath>
#include <string>

#include "netmoments/counting.hpp"
#include "netmoments/error.hpp"
#include "netmoments/inference.hpp"
#include "netmoments/stats.hpp"

namespace nm {
namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
}

}  // namespace

double ConfidenceReport::norm(std::span<const double> candidate) const {
  if (candidate.size() != motifs.size()) {
    throw DomainError("candidate has " + std::to_string(candidate.size()) + " densities for " +
                      std::to_string(motifs.size()) + " motifs");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < motifs.size(); ++i) {
    const int k = motifs[i].num_vertices();
    const double scale = falling_factorial(n, k) /
                         (static_cast<double>(motifs[i].automorphisms()) *
                          std::pow(static_cast<double>(n), exponents[i]));
    const double z = scale * (point_estimates[i] - candidate[i]);
    s += z * z;
  }
  return std::sqrt(s);
}

bool ConfidenceReport::contains(std::span<const double> candidate) const {
  return norm(candidate) <= quantile;
}

ConfidenceReport joint_confidence_set(const Graph& g, std::span<const Motif> motifs, double alpha,
                                      std::int64_t resamples, std::uint64_t seed,
                                      std::optional<double> scale) {
  check_alpha(alpha);
  if (motifs.empty()) throw DomainError("confidence set needs at least one motif");
  ConfidenceReport rep;
  rep.motifs.assign(motifs.begin(), motifs.end());
  rep.alpha = alpha;
  rep.n = g.num_vertices();
  std::vector<Branch> branch;
  for (const Motif& h : motifs) {
    const RegularityTest test = regularity_test(g, h, scale);
    rep.selected.push_back(test.reject);
    rep.statistics.push_back(test.statistic);
    rep.point_estimates.push_back(density_hat(h, g));
    rep.exponents.push_back(h.num_vertices() - (test.reject ? 0.5 : 1.0));
    branch.push_back(test.reject ? Branch::kLinear : Branch::kQuadratic);
  }
  const BootstrapDraws draws = multiplier_draws(g, motifs, branch, resamples, seed);
  rep.quantile = empirical_quantile(row_norms(draws.samples), 1.0 - alpha);
  return rep;
}

MarginalInterval marginal_ci(const Graph& g, const Motif& h, double alpha, std::int64_t resamples,
                             std::uint64_t seed, std::optional<double> scale) {
  check_alpha(alpha);
  const int n = g.num_vertices();
  const double aut = static_cast<double>(h.automorphisms());
  const RegularityTest test = regularity_test(g, h, scale);
  MarginalInterval ci;
  ci.t_hat = density_hat(h, g);
  ci.statistic = test.statistic;
  if (test.reject) {
    ci.branch = Branch::kLinear;
    Eigen::VectorXd t = one_point_density(h, g).t_hat;
    t.array() -= t.mean();
    const double tau = std::sqrt(t.squaredNorm() / n);
    const double half = normal_quantile(1.0 - alpha / 2.0) * aut * tau / std::sqrt(static_cast<double>(n));
    ci.lower = ci.t_hat - half;
    ci.upper = ci.t_hat + half;
    return ci;
  }
  ci.branch = Branch::kQuadratic;
  Eigen::MatrixXd w = two_point_matrix(h, g);
  w.array() -= w.mean();
  const auto draws = spectral_quadratic_draws(quadratic_spectrum(w), resamples, seed);
  const double q_lo = empirical_quantile(draws, alpha / 2.0);
  const double q_hi = empirical_quantile(draws, 1.0 - alpha / 2.0);
  ci.lower = ci.t_hat - aut * q_hi / n;
  ci.upper = ci.t_hat - aut * q_lo / n;
  return ci;
}

}  // namespace nm
