#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "netmoments/error.hpp"
#include "netmoments/limit_law.hpp"
#include "netmoments/quadrature.hpp"
#include "netmoments/rng.hpp"

namespace nm {
namespace {

constexpr double kRankCutoff = 1e-12;

// Symmetric square root of a PSD covariance; small negative eigenvalues from
// cancellation in the join densities are clamped.
Eigen::MatrixXd psd_root(const Eigen::MatrixXd& s) {
  if (s.size() == 0) return s;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
  Eigen::VectorXd ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  if (ev.minCoeff() < -1e-9 * scale) {
    throw NumericError("Gaussian block covariance is not positive semidefinite (min eigenvalue " +
                       std::to_string(ev.minCoeff()) + ")");
  }
  ev = ev.cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.asDiagonal();
}

void fill_normals(Rng& rng, double* out, Eigen::Index count) {
  for (Eigen::Index i = 0; i < count; ++i) out[i] = rng.normal();
}

}  // namespace

LimitSampler::LimitSampler(const LimitSpec& spec) : m_(spec.grid) {
  const auto xs = grid_midpoints(m_);
  const double m = m_;
  int slot = 0;
  parts_.resize(spec.motifs.size());
  for (std::size_t i = 0; i < spec.motifs.size(); ++i) {
    const Motif& h = spec.motifs[i];
    Component& c = parts_[i];
    c.regular = spec.regular[i];
    if (!c.regular) {
      c.g = linear_kernel(h, xs, spec.graphon);
      continue;
    }
    c.regular_slot = slot++;
    c.kernel = conditional_kernel(h, spec.graphon, m_);
    c.kernel.array() -= kernel_degree(h, spec.graphon);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c.kernel / m);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double top = ev.cwiseAbs().maxCoeff();
    std::vector<Eigen::Index> keep;
    for (Eigen::Index s = 0; s < ev.size(); ++s)
      if (top > 0.0 && std::abs(ev(s)) > kRankCutoff * top) keep.push_back(s);
    c.mu.resize(static_cast<Eigen::Index>(keep.size()));
    c.basis.resize(m_, static_cast<Eigen::Index>(keep.size()));
    for (std::size_t s = 0; s < keep.size(); ++s) {
      c.mu(static_cast<Eigen::Index>(s)) = ev(keep[s]);
      c.basis.col(static_cast<Eigen::Index>(s)) = es.eigenvectors().col(keep[s]);
    }
  }
  sigma_root_ = psd_root(spec.sigma.entries);
}

const std::vector<double>& LimitSampler::linear_part(int motif) const {
  const auto& c = parts_.at(motif);
  if (c.regular) throw DomainError("linear part requested for a regular motif");
  return c.g;
}

const Eigen::MatrixXd& LimitSampler::centered_kernel(int motif) const {
  const auto& c = parts_.at(motif);
  if (!c.regular) throw DomainError("kernel requested for an irregular motif");
  return c.kernel;
}

const Eigen::VectorXd& LimitSampler::kernel_spectrum(int motif) const {
  const auto& c = parts_.at(motif);
  if (!c.regular) throw DomainError("kernel spectrum requested for an irregular motif");
  return c.mu;
}

Eigen::MatrixXd LimitSampler::sample(std::int64_t draws, std::uint64_t seed) const {
  if (draws <= 0) throw DomainError("number of limit draws must be positive");
  const auto r = static_cast<Eigen::Index>(parts_.size());
  const Eigen::Index p = sigma_root_.rows();
  const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m_));
  Eigen::MatrixXd out(draws, r);
  const std::int64_t chunks = (draws + kChunkRows - 1) / kChunkRows;

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t chunk = 0; chunk < chunks; ++chunk) {
    const std::int64_t first = chunk * kChunkRows;
    const auto rows = static_cast<Eigen::Index>(std::min(kChunkRows, draws - first));
    // Column j of xi holds the m increments of draw first + j.
    Eigen::MatrixXd xi(m_, rows);
    Rng brownian(seed, Stream::kBrownian, static_cast<std::uint64_t>(chunk));
    fill_normals(brownian, xi.data(), xi.size());
    Eigen::MatrixXd gauss;
    if (p > 0) {
      Eigen::MatrixXd z(p, rows);
      Rng block(seed, Stream::kGaussianBlock, static_cast<std::uint64_t>(chunk));
      fill_normals(block, z.data(), z.size());
      gauss = sigma_root_ * z;
    }
    for (Eigen::Index i = 0; i < r; ++i) {
      const Component& c = parts_[i];
      if (!c.regular) {
        const Eigen::Map<const Eigen::VectorXd> g(c.g.data(), m_);
        out.block(first, i, rows, 1) = (xi.transpose() * g) * inv_sqrt_m;
        continue;
      }
      Eigen::VectorXd v = gauss.row(c.regular_slot).transpose();
      if (c.mu.size() > 0) {
        const Eigen::MatrixXd proj = c.basis.transpose() * xi;  // rank x rows
        v += (proj.array().square() - 1.0).matrix().transpose() * c.mu;
      }
      out.block(first, i, rows, 1) = v;
    }
  }
  return out;
}

Eigen::VectorXd LimitSampler::evaluate_direct(const Eigen::VectorXd& xi,
                                              const Eigen::VectorXd& z) const {
  if (xi.size() != m_ || z.size() != sigma_root_.rows())
    throw DomainError("direct evaluation got increments of the wrong size");
  const double m = m_;
  const Eigen::VectorXd gauss = sigma_root_.rows() > 0 ? Eigen::VectorXd(sigma_root_ * z)
                                                       : Eigen::VectorXd();
  Eigen::VectorXd out(static_cast<Eigen::Index>(parts_.size()));
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const Component& c = parts_[i];
    double s = 0.0;
    if (!c.regular) {
      for (int a = 0; a < m_; ++a) s += c.g[a] * xi(a);
      out(static_cast<Eigen::Index>(i)) = s / std::sqrt(m);
      continue;
    }
    for (int a = 0; a < m_; ++a) {
      s -= c.kernel(a, a);
      for (int b = 0; b < m_; ++b) s += c.kernel(a, b) * xi(a) * xi(b);
    }
    out(static_cast<Eigen::Index>(i)) = gauss(c.regular_slot) + s / m;
  }
  return out;
}

Eigen::VectorXd LimitSampler::evaluate_spectral(const Eigen::VectorXd& xi,
                                                const Eigen::VectorXd& z) const {
  if (xi.size() != m_ || z.size() != sigma_root_.rows())
    throw DomainError("spectral evaluation got increments of the wrong size");
  Eigen::VectorXd out(static_cast<Eigen::Index>(parts_.size()));
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const Component& c = parts_[i];
    if (!c.regular) {
      const Eigen::Map<const Eigen::VectorXd> g(c.g.data(), m_);
      out(static_cast<Eigen::Index>(i)) = g.dot(xi) / std::sqrt(static_cast<double>(m_));
      continue;
    }
    double v = sigma_root_.row(c.regular_slot).dot(z);
    if (c.mu.size() > 0) {
      const Eigen::VectorXd proj = c.basis.transpose() * xi;
      v += (proj.array().square() - 1.0).matrix().dot(c.mu);
    }
    out(static_cast<Eigen::Index>(i)) = v;
  }
  return out;
}

Eigen::MatrixXd sample_limit(const LimitSpec& spec, std::int64_t draws, std::uint64_t seed) {
  return LimitSampler(spec).sample(draws, seed);
}

MarginalRegularLaw marginal_regular_law(const Motif& h, const Graphon& w, int grid) {
  if (grid < 2) throw DomainError("marginal law grid needs at least 2 points");
  MarginalRegularLaw law;
  const Eigen::MatrixXd k = conditional_kernel(h, w, grid) / static_cast<double>(grid);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();
  law.degree = kernel_degree(h, w);
  Eigen::Index nearest = 0;
  for (Eigen::Index s = 1; s < ev.size(); ++s)
    if (std::abs(ev(s) - law.degree) < std::abs(ev(nearest) - law.degree)) nearest = s;
  law.removed = ev(nearest);
  law.degree_gap_warning =
      std::abs(law.removed - law.degree) > 0.05 * std::max(1.0, std::abs(law.degree));
  for (Eigen::Index s = 0; s < ev.size(); ++s)
    if (s != nearest) law.spectrum.push_back(ev(s));
  const Motif single[1] = {h};
  law.sigma = std::sqrt(std::max(0.0, sigma_matrix(single, w).entries(0, 0)));
  return law;
}

std::vector<double> sample_marginal_regular_law(const MarginalRegularLaw& law, std::int64_t draws,
                                                std::uint64_t seed) {
  if (draws <= 0) throw DomainError("number of draws must be positive");
  double top = 0.0;
  for (double l : law.spectrum) top = std::max(top, std::abs(l));
  std::vector<double> lambda;
  for (double l : law.spectrum)
    if (top > 0.0 && std::abs(l) > kRankCutoff * top) lambda.push_back(l);

  constexpr std::int64_t kChunk = 1024;
  std::vector<double> out(static_cast<std::size_t>(draws));
  const std::int64_t chunks = (draws + kChunk - 1) / kChunk;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t chunk = 0; chunk < chunks; ++chunk) {
    Rng rng(seed, Stream::kSpectral, static_cast<std::uint64_t>(chunk));
    const std::int64_t last = std::min(draws, (chunk + 1) * kChunk);
    for (std::int64_t d = chunk * kChunk; d < last; ++d) {
      double v = law.sigma * rng.normal();
      for (double l : lambda) {
        const double z = rng.normal();
        v += l * (z * z - 1.0);
      }
      out[static_cast<std::size_t>(d)] = v;
    }
  }
  return out;
}

}  // namespace nm
