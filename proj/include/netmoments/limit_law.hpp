#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "netmoments/density.hpp"
#include "netmoments/graphon.hpp"
#include "netmoments/motif.hpp"

namespace nm {

// Joint limit of the normalized counts Z(H_i) = (X(H_i) - E X(H_i)) / n^{k_i - 1/2}
// for irregular and / n^{k_i - 1} for regular motifs.
//
// The law is only valid when each regular motif has a nonzero quadratic part
// or Gaussian part; higher-order degeneracies are not detected.
struct LimitSpec {
  std::vector<Motif> motifs;
  std::vector<bool> regular;
  Graphon graphon;
  int grid = 512;
  CovMatrix sigma;  // over the regular motifs, in order

  std::vector<int> regular_indices() const;
  std::vector<int> irregular_indices() const;
};

// Classifies each motif with `is_regular`.
LimitSpec make_limit_spec(std::vector<Motif> motifs, const Graphon& w, int grid = 512);
LimitSpec make_limit_spec(std::vector<Motif> motifs, std::vector<bool> regular, const Graphon& w,
                          int grid = 512);

// Grid discretization of the limit: iid increments eta_i ~ N(0, 1/m) shared by
// all motifs; irregular marginals are sum_i g(x_i) eta_i, regular marginals
// are G + eta^T K eta - tr(K)/m with K the centered two-point kernel.
//
// Draws are produced in row chunks of kChunkRows, each with its own streams
// for the increments and for G, so the increments do not depend on which
// motifs are present.
class LimitSampler {
 public:
  static constexpr std::int64_t kChunkRows = 1024;

  explicit LimitSampler(const LimitSpec& spec);

  Eigen::MatrixXd sample(std::int64_t draws, std::uint64_t seed) const;

  // One draw from explicit standard normal increments xi (eta = xi/sqrt(m))
  // and Gaussian block z, by direct summation over grid pairs. Serial and
  // O(m^2 r); for checking the spectral path.
  Eigen::VectorXd evaluate_direct(const Eigen::VectorXd& xi, const Eigen::VectorXd& z) const;
  // The same draw through the truncated spectral path used by sample().
  Eigen::VectorXd evaluate_spectral(const Eigen::VectorXd& xi, const Eigen::VectorXd& z) const;

  int grid() const { return m_; }
  const std::vector<double>& linear_part(int motif) const;
  const Eigen::MatrixXd& centered_kernel(int motif) const;
  const Eigen::VectorXd& kernel_spectrum(int motif) const;

 private:
  struct Component {
    bool regular = false;
    int regular_slot = -1;
    std::vector<double> g;       // irregular
    Eigen::MatrixXd kernel;      // regular, m x m centered
    Eigen::VectorXd mu;          // retained eigenvalues of kernel / m
    Eigen::MatrixXd basis;       // matching eigenvectors (m x rank)
  };
  int m_;
  std::vector<Component> parts_;
  Eigen::MatrixXd sigma_root_;  // p x p, sigma = root * root^T
};

Eigen::MatrixXd sample_limit(const LimitSpec& spec, std::int64_t draws, std::uint64_t seed);

// sigma * Z + sum_lambda lambda (Z_lambda^2 - 1), with lambda ranging over the
// spectrum of the gridded two-point kernel / m after removing the eigenvalue
// nearest to the kernel degree.
struct MarginalRegularLaw {
  double sigma = 0.0;
  std::vector<double> spectrum;
  double degree = 0.0;          // k(k-1)/(2|Aut|) t
  double removed = 0.0;         // eigenvalue taken out
  bool degree_gap_warning = false;
};
MarginalRegularLaw marginal_regular_law(const Motif& h, const Graphon& w, int grid = 256);
std::vector<double> sample_marginal_regular_law(const MarginalRegularLaw& law, std::int64_t draws,
                                                std::uint64_t seed);

// Radius constant: sum over regular motifs of |alpha_i| k(k-1)/|Aut|.
double mgf_radius_constant(const LimitSpec& spec, std::span<const double> alpha);

// Series for log E exp(theta alpha^T Z), truncated when a term drops below
// 1e-12 or after 200 terms. Requires |theta| < 1/(32 C) when C > 0.
double log_mgf_oracle(const LimitSpec& spec, std::span<const double> alpha, double theta);

// Closed form of the same quantity on the same grid through the spectral
// decomposition of the combined kernel; valid wherever 1 - 2 theta mu > 0.
double log_mgf_spectral(const LimitSpec& spec, std::span<const double> alpha, double theta);

}  // namespace nm
