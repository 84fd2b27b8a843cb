#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "netmoments/graph.hpp"
#include "netmoments/motif.hpp"

namespace nm {

// Linear: (1/sqrt n) sum_v (t_hat(v) - mean) Z_v, the irregular limit.
// Quadratic: (1/n) sum_{u,v} (W_hat(u,v) - mean)(Z_u Z_v - [u == v]), the
// regular limit.
enum class Branch { kLinear, kQuadratic };
std::string_view branch_name(Branch b);

// Centered one-point vectors or two-point matrices, computed once per graph.
struct BootstrapInputs {
  std::vector<Motif> motifs;
  std::vector<Branch> branch;
  int n = 0;
  std::vector<Eigen::VectorXd> linear;     // per motif, empty for quadratic
  std::vector<Eigen::MatrixXd> quadratic;  // per motif, empty for linear
};
BootstrapInputs prepare_bootstrap(const Graph& g, std::span<const Motif> motifs,
                                  std::span<const Branch> branch);

struct BootstrapDraws {
  std::vector<Motif> motifs;
  std::vector<Branch> branch;
  Eigen::MatrixXd samples;  // B x r; row b uses multiplier stream b for every motif
  std::int64_t resamples = 0;
  std::uint64_t seed = 0;
};

BootstrapDraws multiplier_draws(const BootstrapInputs& inputs, std::int64_t resamples,
                                std::uint64_t seed);
BootstrapDraws multiplier_draws(const Graph& g, std::span<const Motif> motifs,
                                std::span<const Branch> branch, std::int64_t resamples,
                                std::uint64_t seed);

// Eigenvalues of the centered two-point matrix divided by n.
Eigen::VectorXd quadratic_spectrum(const Eigen::MatrixXd& centered);

// sum_i lambda_i (xi_i^2 - 1) draws; eigenvalues below 1e-12 of the largest
// in absolute value are skipped.
std::vector<double> spectral_quadratic_draws(const Eigen::VectorXd& lambda, std::int64_t draws,
                                             std::uint64_t seed);

// ceil(B * level)-th smallest value.
double empirical_quantile(std::span<const double> samples, double level);

// Euclidean norm of every row.
std::vector<double> row_norms(const Eigen::MatrixXd& samples);

}  // namespace nm
