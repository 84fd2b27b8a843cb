#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "netmoments/counting.hpp"
#include "netmoments/error.hpp"
#include "netmoments/fixtures.hpp"
#include "netmoments/graphon.hpp"
#include "netmoments/inference.hpp"
#include "netmoments/rng.hpp"
#include "netmoments/stats.hpp"
#include "oracles.hpp"

namespace nm {
namespace {

TEST(RegularityTest, CompleteGraphIsRegular) {
  const auto t = regularity_test(complete_graph(15), triangle_motif());
  EXPECT_NEAR(t.statistic, 0.0, 1e-12);
  EXPECT_FALSE(t.reject);
  EXPECT_NEAR(t.scale, std::sqrt(15.0), 1e-15);
  EXPECT_DOUBLE_EQ(regularity_test(complete_graph(15), edge_motif(), 7.0).scale, 7.0);
  EXPECT_THROW(regularity_test(complete_graph(15), edge_motif(), -1.0), DomainError);
}

TEST(RegularityTest, AffineGraphonIsRejected) {
  const Graph g = sample_graph(affine_graphon(), 400, 2);
  EXPECT_TRUE(regularity_test(g, edge_motif()).reject);
  EXPECT_FALSE(regularity_test(sample_graph(constant_graphon(0.5), 400, 2), edge_motif()).reject);
}

double rejection_frequency(const Graphon& w, const Motif& h, int n, int seeds, std::uint64_t root) {
  std::vector<int> rej(seeds);
#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < seeds; ++s)
    rej[s] = regularity_test(sample_graph(w, n, derive_seed(root, Stream::kReplication, s)), h).reject ? 1 : 0;
  double total = 0.0;
  for (int v : rej) total += v;
  return total / seeds;
}

TEST(RegularityTest, MonteCarloAtN400) {
  EXPECT_GE(rejection_frequency(affine_graphon(), edge_motif(), 400, 200, 1), 0.95);
  EXPECT_LE(rejection_frequency(constant_graphon(0.5), edge_motif(), 400, 200, 2), 0.05);
  EXPECT_LE(rejection_frequency(three_block_graphon(), edge_motif(), 400, 200, 3), 0.05);
}

// Known to fail: sqrt(400) R(K3, three-block) is about 0.49, below the
// threshold of 1, so the test has essentially no power at this size.
TEST(RegularityTest, ThreeBlockTriangleAtN400) {
  EXPECT_GE(rejection_frequency(three_block_graphon(), triangle_motif(), 400, 200, 4), 0.95);
}

TEST(RegularityTest, ThreeBlockTriangleIsRejectedForLargeGraphs) {
  EXPECT_GE(rejection_frequency(three_block_graphon(), triangle_motif(), 3000, 20, 5), 0.95);
}

TEST(JointSet, ContainsPointEstimateAndShrinksWithAlpha) {
  const Graph g = sample_graph(affine_graphon(), 150, 4);
  const Motif ms[] = {edge_motif(), triangle_motif()};
  const auto wide = joint_confidence_set(g, ms, 0.01, 500, 3);
  const auto narrow = joint_confidence_set(g, ms, 0.2, 500, 3);
  EXPECT_TRUE(wide.contains(wide.point_estimates));
  EXPECT_EQ(wide.norm(wide.point_estimates), 0.0);
  EXPECT_GE(wide.quantile, narrow.quantile);
  EXPECT_EQ(wide.exponents[0], wide.selected[0] ? 1.5 : 1.0);
  const std::vector<double> far = {wide.point_estimates[0] + 0.5, wide.point_estimates[1]};
  EXPECT_FALSE(wide.contains(far));
  EXPECT_THROW(joint_confidence_set(g, ms, 1.5, 100, 1), DomainError);
  EXPECT_THROW(wide.norm(std::vector<double>{0.5}), DomainError);
}

TEST(JointSet, SingleIrregularMotifMatchesMarginalInterval) {
  const Graph g = sample_graph(affine_graphon(), 300, 8);
  const Motif ms[] = {edge_motif()};
  const auto set = joint_confidence_set(g, ms, 0.05, 40000, 5);
  const auto ci = marginal_ci(g, edge_motif(), 0.05, 1000, 5);
  ASSERT_TRUE(set.selected[0]);
  ASSERT_EQ(ci.branch, Branch::kLinear);
  EXPECT_EQ(set.point_estimates[0], ci.t_hat);
  // Half width of the joint set along the single coordinate.
  const double n = 300.0;
  const double half = set.quantile * 2.0 * std::pow(n, 1.5) / falling_factorial(300, 2);
  EXPECT_NEAR(half, 0.5 * (ci.upper - ci.lower), 0.03 * 0.5 * (ci.upper - ci.lower));
}

TEST(JointSet, SingleRegularMotifUsesQuadraticBranch) {
  const Graph g = sample_graph(constant_graphon(0.5), 300, 8);
  const Motif ms[] = {edge_motif()};
  const auto set = joint_confidence_set(g, ms, 0.05, 2000, 5);
  const auto ci = marginal_ci(g, edge_motif(), 0.05, 2000, 5);
  EXPECT_FALSE(set.selected[0]);
  EXPECT_EQ(ci.branch, Branch::kQuadratic);
  EXPECT_EQ(set.exponents[0], 1.0);
  EXPECT_LT(ci.lower, ci.upper);
}

TEST(Structure, StatisticPieces) {
  const Graph g = testing::coin_graph(40, 0.5, 12);
  const auto s = structure_stat(g);
  const double t = density_hat(edge_motif(), g);
  EXPECT_DOUBLE_EQ(s.edge_density, t);
  EXPECT_NEAR(s.f_hat, std::pow(t, 4) - density_hat(four_cycle_motif(), g), 1e-15);
  EXPECT_NEAR(structure_f_hat(g), s.f_hat, 1e-15);
  EXPECT_NEAR(s.t_n, std::pow(40.0, 1.5) * s.f_hat / (4.0 * std::sqrt(2.0) * t * t * t * (1.0 - t)), 1e-12);
  const auto r = structure_test(g, 0.05);
  EXPECT_NEAR(r.z_crit, 1.959963984540054, 1e-12);
  EXPECT_EQ(r.reject, std::abs(r.t_n) > r.z_crit);
}

TEST(Structure, Errors) {
  EXPECT_THROW(structure_stat(complete_graph(6)), DomainError);
  EXPECT_THROW(structure_stat(empty_graph(6)), DomainError);
  EXPECT_THROW(structure_stat(complete_graph(3)), SizeError);
  EXPECT_THROW(structure_test(testing::coin_graph(20, 0.5, 1), 0.0), DomainError);
}

TEST(StructureAlternative, CasesAndTaus) {
  const auto affine = structure_alt_params(affine_graphon());
  EXPECT_EQ(affine.case_id, 1);
  EXPECT_NEAR(affine.tau11, 1.0 / 48.0, 1e-12);
  EXPECT_NEAR(affine.tau_sq, affine.tau11 + affine.tau22 - 2.0 * affine.tau12, 1e-15);
  EXPECT_NEAR(affine.f, 1.0 / 16.0 - hom_density(four_cycle_motif(), affine_graphon()), 1e-12);
  // The taus are the covariances of the linear parts of K2 and C4.
  const Motif pair[] = {edge_motif(), four_cycle_motif()};
  const Eigen::MatrixXd gam = gamma_matrix(pair, affine_graphon()).entries;
  EXPECT_NEAR(affine.tau11, gam(0, 0), 1e-12);
  EXPECT_NEAR(affine.tau22, gam(1, 1), 1e-12);
  EXPECT_NEAR(affine.tau12, gam(0, 1), 1e-12);
  EXPECT_FALSE(affine.limit.has_value());

  const auto flat = structure_alt_params(constant_graphon(0.5), 64);
  EXPECT_EQ(flat.case_id, 4);
  EXPECT_TRUE(std::isnan(flat.tau_sq));
  ASSERT_TRUE(flat.limit.has_value());
  EXPECT_EQ(flat.limit->motifs.size(), 2u);
  EXPECT_NEAR(flat.f, 0.0, 1e-15);
  EXPECT_NEAR(flat.weight_k2, 4.0 * 0.125 * 2.0, 1e-15);
  EXPECT_EQ(flat.weight_c4, -8.0);

  Eigen::MatrixXd v(3, 3);
  v << 0.5, 0, 0, 0, 0, 1, 0, 1, 0;
  const auto three = structure_alt_params(Graphon::block({0.5, 0.25, 0.25}, v));
  EXPECT_EQ(three.case_id, 3);
  EXPECT_TRUE(three.k2_regular);
  EXPECT_NEAR(three.tau_sq, three.tau22, 1e-15);
  EXPECT_NEAR(three.tau11, 0.0, 1e-14);
}

TEST(StructureAlternative, DeltaVarianceMatchesSimulation) {
  // Irregular case: sqrt(n) (f_hat - f) is asymptotically N(0, delta_variance).
  const Graphon w = affine_graphon();
  const auto alt = structure_alt_params(w);
  const int n = 800;
  const int reps = 600;
  std::vector<double> x(reps);
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < reps; ++r)
    x[r] = std::sqrt(static_cast<double>(n)) * (structure_f_hat(sample_graph(w, n, 1000 + r)) - alt.f);
  EXPECT_NEAR(variance(x), alt.delta_variance, 0.15 * alt.delta_variance);
}

TEST(Clustering, Values) {
  EXPECT_DOUBLE_EQ(clustering_coefficient(complete_graph(7)), 1.0);
  std::vector<Edge> e;
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) e.emplace_back(u, v);
  EXPECT_DOUBLE_EQ(clustering_coefficient(Graph::from_edges(6, e)), 0.0);
  EXPECT_THROW(clustering_coefficient(empty_graph(5)), DomainError);
  const Graph g = testing::coin_graph(30, 0.4, 2);
  EXPECT_NEAR(clustering_coefficient(g),
              3.0 * count_copies(triangle_motif(), g) / static_cast<double>(count_copies(two_star_motif(), g)),
              1e-15);
}

}  // namespace
}  // namespace nm
