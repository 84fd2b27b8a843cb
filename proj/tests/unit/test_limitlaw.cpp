#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "netmoments/error.hpp"
#include "netmoments/fixtures.hpp"
#include "netmoments/limit_law.hpp"
#include "netmoments/rng.hpp"
#include "netmoments/stats.hpp"

namespace nm {
namespace {

std::vector<double> column(const Eigen::MatrixXd& m, int j) {
  std::vector<double> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) out[static_cast<std::size_t>(i)] = m(i, j);
  return out;
}

TEST(LimitSpec, ClassifiesAndValidates) {
  const LimitSpec spec = make_limit_spec({edge_motif(), triangle_motif()}, three_block_graphon(), 64);
  EXPECT_EQ(spec.regular_indices(), std::vector<int>{0});
  EXPECT_EQ(spec.irregular_indices(), std::vector<int>{1});
  EXPECT_EQ(spec.sigma.entries.rows(), 1);
  EXPECT_THROW(make_limit_spec({edge_motif()}, std::vector<bool>{true, false}, three_block_graphon()), Error);
  EXPECT_THROW(make_limit_spec({edge_motif()}, constant_graphon(0.5), 1), Error);
}

TEST(LimitLaw, ConstantGraphonEdgeIsGaussian) {
  // The centered kernel vanishes, leaving N(0, p(1-p)/2).
  const LimitSpec spec = make_limit_spec({edge_motif()}, constant_graphon(0.5), 128);
  const auto x = column(sample_limit(spec, 100000, 3), 0);
  EXPECT_NEAR(mean(x), 0.0, 4.0 * std::sqrt(0.125 / 1e5));
  EXPECT_NEAR(variance(x), 0.125, 0.05 * 0.125);
  EXPECT_LT(ks_one_sample(x, [](double v) { return normal_cdf(v / std::sqrt(0.125)); }), 0.01);
}

TEST(LimitLaw, IrregularVarianceIsGamma) {
  const LimitSpec spec = make_limit_spec({edge_motif(), triangle_motif()}, affine_graphon(), 256);
  ASSERT_EQ(spec.irregular_indices().size(), 2u);
  const Eigen::MatrixXd draws = sample_limit(spec, 100000, 8);
  const Eigen::MatrixXd gam = gamma_matrix(spec.motifs, spec.graphon).entries;
  const auto a = column(draws, 0), b = column(draws, 1);
  EXPECT_NEAR(variance(a), gam(0, 0), 0.03 * gam(0, 0));
  EXPECT_NEAR(variance(b), gam(1, 1), 0.03 * gam(1, 1));
  EXPECT_NEAR(covariance(a, b), gam(0, 1), 0.03 * gam(0, 1));
  EXPECT_NEAR(mean(a), 0.0, 4.0 * std::sqrt(gam(0, 0) / 1e5));
}

TEST(LimitLaw, RegularVarianceIsSigmaPlusKernelNorm) {
  const LimitSpec spec = make_limit_spec({edge_motif()}, bipartite_graphon(0.5), 128);
  ASSERT_TRUE(spec.regular[0]);
  const LimitSampler sampler(spec);
  const double quad = 2.0 * sampler.kernel_spectrum(0).squaredNorm();
  const double expected = spec.sigma.entries(0, 0) + quad;
  EXPECT_GT(quad, 0.0);
  const auto x = column(sampler.sample(100000, 12), 0);
  EXPECT_NEAR(mean(x), 0.0, 4.0 * std::sqrt(expected / 1e5));
  EXPECT_NEAR(variance(x), expected, 0.05 * expected);
}

TEST(LimitLaw, Reproducible) {
  const LimitSpec spec = make_limit_spec({edge_motif(), triangle_motif()}, six_block_graphon(), 96);
  EXPECT_EQ(sample_limit(spec, 3000, 5), sample_limit(spec, 3000, 5));
  EXPECT_NE(sample_limit(spec, 3000, 5), sample_limit(spec, 3000, 6));
}

TEST(LimitLaw, IrregularDrawsIgnoreRegularMotifs) {
  const Graphon w = three_block_graphon();  // K2 regular, K3 irregular
  const LimitSpec both = make_limit_spec({edge_motif(), triangle_motif()}, w, 96);
  const LimitSpec alone = make_limit_spec({triangle_motif()}, w, 96);
  const Eigen::MatrixXd a = sample_limit(both, 2500, 42);
  const Eigen::MatrixXd b = sample_limit(alone, 2500, 42);
  for (Eigen::Index i = 0; i < a.rows(); ++i) ASSERT_EQ(a(i, 1), b(i, 0)) << i;
}

TEST(LimitLaw, DirectAndSpectralEvaluationAgree) {
  const LimitSpec spec =
      make_limit_spec({edge_motif(), triangle_motif(), four_cycle_motif()}, std::vector<bool>{true, false, true},
                      affine_graphon(), 48);
  const LimitSampler sampler(spec);
  Rng rng(17);
  for (int rep = 0; rep < 5; ++rep) {
    Eigen::VectorXd xi(48), z(2);
    for (auto& v : xi) v = rng.normal();
    for (auto& v : z) v = rng.normal();
    const Eigen::VectorXd d = sampler.evaluate_direct(xi, z);
    const Eigen::VectorXd s = sampler.evaluate_spectral(xi, z);
    EXPECT_LT((d - s).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(LimitLaw, CenteredKernelRowsIntegrateToZeroUnderRegularity) {
  const LimitSpec spec = make_limit_spec({triangle_motif()}, six_block_graphon(), 60);
  const LimitSampler sampler(spec);
  const Eigen::MatrixXd& k = sampler.centered_kernel(0);
  EXPECT_LT(k.rowwise().mean().cwiseAbs().maxCoeff(), 1e-13);
}

TEST(MarginalLaw, ConstantGraphonHasOnlyTheDegreeEigenvalue) {
  for (const Motif& h : {edge_motif(), triangle_motif()}) {
    const auto law = marginal_regular_law(h, constant_graphon(0.5), 64);
    EXPECT_NEAR(law.removed, law.degree, 1e-12);
    EXPECT_FALSE(law.degree_gap_warning);
    for (double l : law.spectrum) EXPECT_NEAR(l, 0.0, 1e-12);
    const Motif single[1] = {h};
    EXPECT_NEAR(law.sigma * law.sigma, sigma_matrix(single, constant_graphon(0.5)).entries(0, 0), 1e-14);
  }
}

TEST(MarginalLaw, RegularBlockGraphon) {
  const auto law = marginal_regular_law(triangle_motif(), six_block_graphon(), 120);
  EXPECT_NEAR(law.removed, law.degree, 1e-10);
  EXPECT_FALSE(law.degree_gap_warning);
  EXPECT_EQ(law.sigma, 0.0);
}

TEST(MarginalLaw, WarnsWhenDegreeIsNotAnEigenvalue) {
  // One dense block of size 0.6: K2 is irregular, top eigenvalue 0.3 against d = 0.18.
  Eigen::MatrixXd v(2, 2);
  v << 1.0, 0.0, 0.0, 0.0;
  const auto law = marginal_regular_law(edge_motif(), Graphon::block({0.6, 0.4}, v), 120);
  EXPECT_NEAR(law.removed, 0.3, 1e-12);
  EXPECT_TRUE(law.degree_gap_warning);
}

TEST(MarginalLaw, SpectrumSquaresConvergeToKernelNorm) {
  // For K2 the two-point kernel is W/2, so the squared spectrum sums to
  // (1/4) int W^2 = 7/96 for W = (x+y)/2.
  const auto coarse = marginal_regular_law(edge_motif(), affine_graphon(), 256);
  const auto fine = marginal_regular_law(edge_motif(), affine_graphon(), 512);
  auto total = [](const MarginalRegularLaw& l) {
    double s = l.removed * l.removed;
    for (double x : l.spectrum) s += x * x;
    return s;
  };
  EXPECT_NEAR(total(fine), 7.0 / 96.0, 1e-3 * 7.0 / 96.0);
  const auto c3 = marginal_regular_law(triangle_motif(), affine_graphon(), 256);
  const auto f3 = marginal_regular_law(triangle_motif(), affine_graphon(), 512);
  EXPECT_LT(std::abs(total(c3) - total(f3)), 1e-3 * total(f3));
  EXPECT_LT(std::abs(total(coarse) - total(fine)), 1e-3 * total(fine));
}

TEST(MarginalLaw, SamplerMatchesMoments) {
  const auto law = marginal_regular_law(edge_motif(), bipartite_graphon(0.5), 64);
  double quad = 0.0;
  for (double l : law.spectrum) quad += 2.0 * l * l;
  const auto x = sample_marginal_regular_law(law, 100000, 4);
  EXPECT_NEAR(variance(x), law.sigma * law.sigma + quad, 0.05 * (law.sigma * law.sigma + quad));
  EXPECT_EQ(x, sample_marginal_regular_law(law, 100000, 4));
}

TEST(Mgf, ZeroThetaAndRadius) {
  const LimitSpec spec = make_limit_spec({edge_motif(), triangle_motif()}, six_block_graphon(), 96);
  const double alpha[] = {1.0, 1.0};
  EXPECT_EQ(log_mgf_oracle(spec, alpha, 0.0), 0.0);
  EXPECT_NEAR(mgf_radius_constant(spec, alpha), 1.0, 1e-15);  // K3 regular: 3*2/6
  EXPECT_THROW(log_mgf_oracle(spec, alpha, 0.05), DomainError);
  const double wrong[] = {1.0};
  EXPECT_THROW(log_mgf_oracle(spec, wrong, 0.01), DomainError);
}

TEST(Mgf, PureIrregularIsGaussian) {
  const LimitSpec spec = make_limit_spec({edge_motif()}, affine_graphon(), 64);
  const double alpha[] = {2.0};
  for (double theta : {-0.7, 0.3, 1.5})
    EXPECT_NEAR(log_mgf_oracle(spec, alpha, theta), 0.5 * theta * theta * 4.0 / 48.0, 1e-14);
}

TEST(Mgf, SeriesMatchesClosedForm) {
  const LimitSpec spec = make_limit_spec({edge_motif(), triangle_motif()}, six_block_graphon(), 96);
  const double alpha[] = {1.0, 1.0};
  for (double theta : {-0.03, -0.01, 0.02, 0.031})
    EXPECT_NEAR(log_mgf_oracle(spec, alpha, theta), log_mgf_spectral(spec, alpha, theta), 1e-12) << theta;
  const LimitSpec mixed = make_limit_spec({edge_motif(), four_cycle_motif()}, std::vector<bool>{false, true},
                                          affine_graphon(), 128);
  const double beta[] = {1.0, -0.5};
  for (double theta : {-0.015, 0.015})
    EXPECT_NEAR(log_mgf_oracle(mixed, beta, theta), log_mgf_spectral(mixed, beta, theta), 1e-12) << theta;
}

TEST(Mgf, SecondOrderMatchesGridVariance) {
  // As theta -> 0, 2 log E / theta^2 is the variance: alpha^T Sigma alpha plus
  // twice the squared norm of the combined centered kernel.
  const struct {
    std::vector<Motif> motifs;
    Graphon w;
    std::vector<double> alpha;
  } cases[] = {{{edge_motif()}, bipartite_graphon(0.5), {1.0}},
               {{triangle_motif()}, six_block_graphon(), {1.0}},
               {{edge_motif(), four_cycle_motif()}, constant_graphon(0.3), {1.0, 0.5}}};
  for (const auto& c : cases) {
    const LimitSpec spec = make_limit_spec(c.motifs, c.w, 240);
    const LimitSampler sampler(spec);
    const int m = sampler.grid();
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (std::size_t i = 0; i < c.motifs.size(); ++i) {
      ASSERT_TRUE(spec.regular[i]);
      t += c.alpha[i] * sampler.centered_kernel(static_cast<int>(i)) / m;
    }
    const Eigen::Map<const Eigen::VectorXd> a(c.alpha.data(), static_cast<Eigen::Index>(c.alpha.size()));
    const double grid_var = a.dot(spec.sigma.entries * a) + 2.0 * t.squaredNorm();
    const double theta = 1e-5;
    const double series_var = 2.0 * log_mgf_oracle(spec, c.alpha, theta) / (theta * theta);
    EXPECT_NEAR(series_var, grid_var, 2e-3 * std::max(grid_var, 1e-12));
  }
}

}  // namespace
}  // namespace nm
