#include <gtest/gtest.h>

#include <cmath>

#include "netmoments/density.hpp"
#include "netmoments/error.hpp"
#include "netmoments/fixtures.hpp"
#include "netmoments/graphon.hpp"
#include "netmoments/quadrature.hpp"
#include "netmoments/reference.hpp"
#include "oracles.hpp"

namespace nm {
namespace {

double integrate(const QuadratureRule& r, double (*f)(double)) {
  double s = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * f(r.nodes[i]);
  return s;
}

TEST(Quadrature, GaussLegendreIsExactForHighDegree) {
  const auto r = gauss_legendre(8);
  EXPECT_NEAR(integrate(r, [](double x) { return std::pow(x, 15); }), 1.0 / 16.0, 1e-15);
  double wsum = 0.0;
  for (double w : r.weights) wsum += w;
  EXPECT_NEAR(wsum, 1.0, 1e-15);
  const auto shifted = gauss_legendre(5, -1.0, 3.0);
  double s = 0.0;
  for (std::size_t i = 0; i < shifted.size(); ++i) s += shifted.weights[i] * shifted.nodes[i] * shifted.nodes[i];
  EXPECT_NEAR(s, 28.0 / 3.0, 1e-12);
}

TEST(Quadrature, CompositeRuleHandlesKinks) {
  const double bp[] = {0.3};
  const auto r = composite_gauss_legendre(bp, 4);
  EXPECT_NEAR(integrate(r, [](double x) { return std::abs(x - 0.3); }), (0.09 + 0.49) / 2.0, 1e-15);
}

TEST(Quadrature, MidpointGrid) {
  const auto xs = grid_midpoints(4);
  ASSERT_EQ(xs.size(), 4u);
  EXPECT_DOUBLE_EQ(xs[0], 0.125);
  EXPECT_DOUBLE_EQ(xs[3], 0.875);
}

TEST(Graphon, BlockValidation) {
  Eigen::MatrixXd v(2, 2);
  v << 0.1, 0.2, 0.2, 0.3;
  EXPECT_NO_THROW(Graphon::block({0.5, 0.5}, v));
  EXPECT_THROW(Graphon::block({0.5, 0.4}, v), DomainError);
  Eigen::MatrixXd asym = v;
  asym(0, 1) = 0.4;
  EXPECT_THROW(Graphon::block({0.5, 0.5}, asym), DomainError);
  Eigen::MatrixXd big = v;
  big(1, 1) = 1.5;
  EXPECT_THROW(Graphon::block({0.5, 0.5}, big), DomainError);
}

TEST(Graphon, ExpressionValidation) {
  EXPECT_THROW(Graphon::expression("asym", [](double x, double) { return x; }), DomainError);
  EXPECT_THROW(Graphon::expression("neg", [](double x, double y) { return x * y - 0.5; }), DomainError);
}

TEST(Graphon, EvaluationAndBlocks) {
  const Graphon w = three_block_graphon();
  EXPECT_EQ(w(0.1, 0.9), 1.0);
  EXPECT_EQ(w(0.5, 0.5), 1.0);
  EXPECT_EQ(w(0.1, 0.1), 0.0);
  EXPECT_TRUE(w.zero_one_valued());
  EXPECT_FALSE(affine_graphon().zero_one_valued());
  EXPECT_DOUBLE_EQ(affine_graphon()(0.2, 0.6), 0.4);
}

// Frozen values of the fixtures.
TEST(Density, FixtureValues) {
  EXPECT_NEAR(hom_density(edge_motif(), affine_graphon()), 0.5, 1e-12);
  EXPECT_NEAR(hom_density(triangle_motif(), affine_graphon()), 5.0 / 32.0, 1e-12);
  EXPECT_NEAR(hom_density(edge_motif(), three_block_graphon()), 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(hom_density(triangle_motif(), three_block_graphon()), 1.0 / 27.0, 1e-14);
  EXPECT_NEAR(hom_density(edge_motif(), six_block_graphon()), 13.0 / 36.0, 1e-14);
  EXPECT_NEAR(hom_density(triangle_motif(), six_block_graphon()), 1.0 / 18.0, 1e-14);
  EXPECT_NEAR(hom_density(edge_motif(), product_graphon()), 0.25, 1e-12);
  EXPECT_NEAR(hom_density(four_cycle_motif(), product_graphon()), 1.0 / 81.0, 1e-12);
  EXPECT_NEAR(hom_density(edge_motif(), bipartite_graphon(0.5)), 0.25, 1e-14);
  EXPECT_NEAR(hom_density(four_cycle_motif(), constant_graphon(0.3)), std::pow(0.3, 4), 1e-15);
}

TEST(Density, MatchesBlockEnumerationOracle) {
  Eigen::MatrixXd v(3, 3);
  v << 0.9, 0.2, 0.5, 0.2, 0.1, 0.7, 0.5, 0.7, 0.4;
  Eigen::VectorXd sizes(3);
  sizes << 0.2, 0.3, 0.5;
  const Graphon w = Graphon::block({0.2, 0.3, 0.5}, v);
  for (const Motif& h : small_motif_catalog())
    EXPECT_NEAR(hom_density(h, w), testing::block_density(h, sizes, v), 1e-14) << h.to_string();
  for (const Motif& h : {bowtie_motif(), Motif::cycle(5), Motif::complete(5)})
    EXPECT_NEAR(hom_density(h, w), testing::block_density(h, sizes, v), 1e-14) << h.to_string();
  const MultiMotif strong = edge_join(triangle_motif(), {0, 1}, four_cycle_motif(), {0, 1}, JoinMode::kStrong);
  std::vector<std::pair<std::pair<int, int>, int>> edges;
  for (const auto& e : strong.edges()) edges.push_back({e.pair, e.multiplicity});
  EXPECT_NEAR(hom_density(strong, w), testing::block_density(strong.num_vertices(), edges, sizes, v), 1e-14);
  EXPECT_NEAR(hom_density(strong, w), reference::hom_density_bruteforce(strong, w), 1e-14);
}

TEST(Density, ExpressionConvergenceCheck) {
  const auto est = hom_density_checked(MultiMotif(four_cycle_motif()), affine_graphon());
  EXPECT_TRUE(est.converged);
  EXPECT_NEAR(est.value, est.coarse, 1e-10);
}

TEST(Density, EmpiricalGraphonMatchesAllMaps) {
  const Graph g = testing::coin_graph(9, 0.5, 11);
  const Graphon w = Graphon::empirical(g);
  for (const Motif& h : {edge_motif(), triangle_motif(), four_cycle_motif(), two_star_motif()})
    EXPECT_NEAR(hom_density(h, w), reference::all_maps_density(h, g), 1e-14);
}

TEST(Density, ConditionalDensities) {
  const Graphon w = product_graphon();
  const double xs[] = {0.1, 0.5, 0.8};
  const auto t0 = conditional_density(edge_motif(), 0, xs, w);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(t0[i], xs[i] / 2.0, 1e-13);
  const auto pair = pair_conditional_density(edge_motif(), 0, 1, xs, xs, w);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_NEAR(pair(i, j), xs[i] * xs[j], 1e-15);
  // Center of the two-star: (x/2)^2.
  EXPECT_NEAR(conditional_density(two_star_motif(), 0, 0.6, w), 0.36 / 4.0, 1e-13);
  EXPECT_THROW(conditional_density(edge_motif(), 2, 0.5, w), DomainError);
}

TEST(Density, ConditionalDensityIntegratesToDensity) {
  const Graphon w = affine_graphon();
  const auto rule = gauss_legendre(24);
  for (const Motif& h : {triangle_motif(), two_star_motif(), four_cycle_motif()}) {
    for (int a = 0; a < h.num_vertices(); ++a) {
      const auto t = conditional_density(h, a, rule.nodes, w);
      double s = 0.0;
      for (std::size_t i = 0; i < t.size(); ++i) s += rule.weights[i] * t[i];
      EXPECT_NEAR(s, hom_density(h, w), 1e-12);
    }
  }
}

TEST(Sampling, DeterministicAndCalibrated) {
  const Graphon w = constant_graphon(0.3);
  const Graph a = sample_graph(w, 200, 5);
  const Graph b = sample_graph(w, 200, 5);
  const Graph c = sample_graph(w, 200, 6);
  EXPECT_EQ(a.edge_list(), b.edge_list());
  EXPECT_NE(a.edge_list(), c.edge_list());
  const double dens = static_cast<double>(a.num_edges()) / (200.0 * 199.0 / 2.0);
  EXPECT_NEAR(dens, 0.3, 0.02);
  EXPECT_THROW(sample_graph(w, 0, 1), DomainError);
}

TEST(Sampling, LabelsDriveEdges) {
  std::vector<double> labels;
  const Graph g = sample_graph(three_block_graphon(), 60, 9, &labels);
  ASSERT_EQ(labels.size(), 60u);
  const Graphon w = three_block_graphon();
  for (int u = 0; u < 60; ++u)
    for (int v = u + 1; v < 60; ++v) EXPECT_EQ(g.adjacent(u, v), w(labels[u], labels[v]) == 1.0);
}

TEST(Fixtures, BuiltinNames) {
  EXPECT_NEAR(hom_density(edge_motif(), builtin_graphon("const:0.4")), 0.4, 1e-15);
  EXPECT_NEAR(hom_density(edge_motif(), builtin_graphon("paper-w2")), 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(hom_density(edge_motif(), builtin_graphon("wplus")), 0.25, 1e-14);
  EXPECT_NEAR(hom_density(edge_motif(), builtin_graphon("wminus")), 0.25, 1e-12);
  EXPECT_TRUE(is_builtin_graphon_name("paper-w3"));
  EXPECT_FALSE(is_builtin_graphon_name("/tmp/x.json"));
  EXPECT_THROW(builtin_graphon("const:1.5"), Error);
}

}  // namespace
}  // namespace nm
