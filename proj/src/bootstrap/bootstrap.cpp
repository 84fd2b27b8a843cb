#include "netmoments/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "netmoments/counting.hpp"
#include "netmoments/error.hpp"
#include "netmoments/kernels.hpp"
#include "netmoments/rng.hpp"

namespace nm {

std::string_view branch_name(Branch b) { return b == Branch::kLinear ? "linear" : "quadratic"; }

BootstrapInputs prepare_bootstrap(const Graph& g, std::span<const Motif> motifs,
                                  std::span<const Branch> branch) {
  if (motifs.empty()) throw DomainError("bootstrap needs at least one motif");
  if (motifs.size() != branch.size()) throw DomainError("one bootstrap branch per motif required");
  BootstrapInputs in;
  in.motifs.assign(motifs.begin(), motifs.end());
  in.branch.assign(branch.begin(), branch.end());
  in.n = g.num_vertices();
  in.linear.resize(motifs.size());
  in.quadratic.resize(motifs.size());
  for (std::size_t i = 0; i < motifs.size(); ++i) {
    if (branch[i] == Branch::kLinear) {
      Eigen::VectorXd t = one_point_density(motifs[i], g).t_hat;
      t.array() -= t.mean();
      in.linear[i] = std::move(t);
    } else {
      Eigen::MatrixXd w = two_point_matrix(motifs[i], g);
      w.array() -= w.mean();
      in.quadratic[i] = std::move(w);
    }
  }
  return in;
}

BootstrapDraws multiplier_draws(const BootstrapInputs& in, std::int64_t resamples,
                                std::uint64_t seed) {
  if (resamples < 1) throw DomainError("bootstrap needs at least one resample");
  const int n = in.n;
  const auto r = static_cast<Eigen::Index>(in.motifs.size());
  BootstrapDraws out{in.motifs, in.branch, Eigen::MatrixXd(resamples, r), resamples, seed};
  std::vector<double> traces(in.motifs.size(), 0.0);
  for (std::size_t i = 0; i < in.motifs.size(); ++i)
    if (in.branch[i] == Branch::kQuadratic) traces[i] = in.quadratic[i].trace();
  const double sqrt_n = std::sqrt(static_cast<double>(n));

  constexpr std::int64_t kBlock = 256;
  const std::int64_t blocks = (resamples + kBlock - 1) / kBlock;
  for (std::int64_t blk = 0; blk < blocks; ++blk) {
    const std::int64_t first = blk * kBlock;
    const auto cols = static_cast<Eigen::Index>(std::min(kBlock, resamples - first));
    Eigen::MatrixXd z(n, cols);
#pragma omp parallel for schedule(static)
    for (Eigen::Index c = 0; c < cols; ++c) {
      Rng rng(seed, Stream::kMultipliers, static_cast<std::uint64_t>(first + c));
      for (int v = 0; v < n; ++v) z(v, c) = rng.normal();
    }
    for (Eigen::Index i = 0; i < r; ++i) {
      if (in.branch[i] == Branch::kLinear) {
        out.samples.block(first, i, cols, 1) = (z.transpose() * in.linear[i]) / sqrt_n;
      } else {
        const Eigen::VectorXd q = kernels::quadratic_forms(in.quadratic[i], z);
        out.samples.block(first, i, cols, 1) = (q.array() - traces[i]) / static_cast<double>(n);
      }
    }
  }
  return out;
}

BootstrapDraws multiplier_draws(const Graph& g, std::span<const Motif> motifs,
                                std::span<const Branch> branch, std::int64_t resamples,
                                std::uint64_t seed) {
  return multiplier_draws(prepare_bootstrap(g, motifs, branch), resamples, seed);
}

Eigen::VectorXd quadratic_spectrum(const Eigen::MatrixXd& centered) {
  if (centered.rows() == 0 || centered.rows() != centered.cols())
    throw DomainError("quadratic spectrum needs a nonempty square matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(centered, Eigen::EigenvaluesOnly);
  return es.eigenvalues() / static_cast<double>(centered.rows());
}

std::vector<double> spectral_quadratic_draws(const Eigen::VectorXd& lambda, std::int64_t draws,
                                             std::uint64_t seed) {
  if (draws < 1) throw DomainError("number of draws must be positive");
  const double top = lambda.size() > 0 ? lambda.cwiseAbs().maxCoeff() : 0.0;
  std::vector<double> kept;
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    if (top > 0.0 && std::abs(lambda(i)) > 1e-12 * top) kept.push_back(lambda(i));
  std::vector<double> out(static_cast<std::size_t>(draws));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < draws; ++b) {
    Rng rng(seed, Stream::kSpectral, static_cast<std::uint64_t>(b));
    double s = 0.0;
    for (double l : kept) {
      const double x = rng.normal();
      s += l * (x * x - 1.0);
    }
    out[static_cast<std::size_t>(b)] = s;
  }
  return out;
}

double empirical_quantile(std::span<const double> samples, double level) {
  if (samples.empty()) throw DomainError("quantile of an empty sample");
  if (!(level > 0.0 && level < 1.0)) throw DomainError("quantile level must lie in (0, 1)");
  std::vector<double> s(samples.begin(), samples.end());
  const auto b = static_cast<double>(s.size());
  // The small offset keeps B * level from rounding up past an integer.
  auto rank = static_cast<std::size_t>(std::ceil(b * level - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, s.size());
  std::nth_element(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(rank - 1), s.end());
  return s[rank - 1];
}

std::vector<double> row_norms(const Eigen::MatrixXd& samples) {
  std::vector<double> out(static_cast<std::size_t>(samples.rows()));
  for (Eigen::Index b = 0; b < samples.rows(); ++b) out[static_cast<std::size_t>(b)] = samples.row(b).norm();
  return out;
}

}  // namespace nm
