#include <gtest/gtest.h>

#include <cmath>

#include "netmoments/counting.hpp"
#include "netmoments/error.hpp"
#include "netmoments/fixtures.hpp"
#include "netmoments/reference.hpp"
#include "oracles.hpp"

namespace nm {
namespace {

std::vector<Motif> closed_form_shapes() {
  // Relabeled so the closed forms must go through the canonical mapping.
  return {edge_motif(), two_star_motif(), Motif(3, {{0, 2}, {1, 2}}), triangle_motif(),
          four_cycle_motif(), Motif(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}}), bowtie_motif()};
}

std::vector<Motif> enumerated_shapes() {
  return {Motif::path(4), Motif::star(3), Motif::complete(4), Motif(4, {{0, 1}, {2, 3}}),
          Motif(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})};
}

TEST(Counting, FallingFactorial) {
  EXPECT_DOUBLE_EQ(falling_factorial(10, 3), 720.0);
  EXPECT_DOUBLE_EQ(falling_factorial(5, 0), 1.0);
  EXPECT_DOUBLE_EQ(falling_factorial(3, 4), 0.0);
}

TEST(Counting, CopiesMatchSubsetEnumeration) {
  Rng seeds(123);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 5;
    const double p = 0.2 + 0.15 * (trial % 5);
    const Graph g = testing::coin_graph(n, p, seeds.engine()());
    for (const Motif& h : small_motif_catalog())
      ASSERT_EQ(count_copies(h, g), testing::copies_by_subsets(h, g)) << h.to_string() << " n=" << n;
  }
}

TEST(Counting, ClosedFormsMatchBacktracking) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const Graph g = testing::coin_graph(40, 0.3 + 0.2 * seed / 3.0, seed);
    for (const Motif& h : closed_form_shapes()) {
      const auto closed = count_injective(h, g);
      EXPECT_EQ(closed, kernels::count_injective(h, g)) << h.to_string();
      EXPECT_EQ(closed, reference::count_injective(h, g)) << h.to_string();
      EXPECT_EQ(closed % h.automorphisms(), 0);
    }
  }
}

TEST(Counting, DensityHatExtremes) {
  for (const Motif& h : {edge_motif(), triangle_motif(), four_cycle_motif(), bowtie_motif()}) {
    EXPECT_DOUBLE_EQ(density_hat(h, complete_graph(9)), 1.0);
    EXPECT_DOUBLE_EQ(density_hat(h, empty_graph(9)), 0.0);
  }
  EXPECT_EQ(count_copies(four_cycle_motif(), cycle_graph(4)), 1);
  EXPECT_EQ(count_copies(triangle_motif(), complete_graph(6)), 20);
  EXPECT_THROW(count_injective(four_cycle_motif(), complete_graph(3)), SizeError);
}

TEST(Counting, SmallExamples) {
  EXPECT_EQ(count_copies(triangle_motif(), complete_graph(4)), 4);
  EXPECT_DOUBLE_EQ(density_hat(edge_motif(), complete_graph(5)), 1.0);
  EXPECT_EQ(density_hat(triangle_motif(), cycle_graph(5)), 0.0);
  EXPECT_THROW(count_copies(triangle_motif(), complete_graph(2)), SizeError);
}

TEST(Counting, InvariantUnderRelabeling) {
  const Graph g = testing::coin_graph(14, 0.5, 31);
  std::vector<int> perm(14);
  for (int v = 0; v < 14; ++v) perm[v] = (5 * v + 3) % 14;
  const Graph h = g.relabeled(perm);
  for (const Motif& m : small_motif_catalog()) EXPECT_EQ(count_copies(m, g), count_copies(m, h)) << m.to_string();
}

TEST(Counting, EdgeDensityIsUnbiased) {
  const int seeds = 2000;
  double total = 0.0;
  for (int s = 0; s < seeds; ++s) total += density_hat(edge_motif(), testing::coin_graph(50, 0.5, 5000 + s));
  EXPECT_NEAR(total / seeds, 0.5, 0.01);
}

TEST(Counting, OnePointExamples) {
  const Graph g = testing::coin_graph(20, 0.4, 13);
  const double n = 20.0;
  const auto edge = one_point_density(edge_motif(), g);
  for (int v = 0; v < 20; ++v) EXPECT_NEAR(edge.t_hat(v), g.degree(v) / n, 1e-15);
  const auto tri = one_point_density(triangle_motif(), g);
  const Eigen::MatrixXd a = g.adjacency_matrix();
  const Eigen::MatrixXd a3 = a * a * a;
  // (1/(2 n^2)) sum_{s1 != s2} w_{v s1} w_{v s2} w_{s1 s2} = (A^3)_{vv} / (2 n^2).
  for (int v = 0; v < 20; ++v) EXPECT_NEAR(tri.t_hat(v), a3(v, v) / (2.0 * n * n), 1e-15);
}

TEST(Counting, TwoPointExamples) {
  const Graph g = testing::coin_graph(20, 0.4, 14);
  const double n = 20.0;
  const Eigen::MatrixXd a = g.adjacency_matrix();
  const Eigen::MatrixXd a2 = a * a;
  const Eigen::MatrixXd edge = two_point_matrix(edge_motif(), g);
  const Eigen::MatrixXd tri = two_point_matrix(triangle_motif(), g);
  const Eigen::MatrixXd wedge = two_point_matrix(two_star_motif(), g);
  for (int u = 0; u < 20; ++u)
    for (int v = 0; v < 20; ++v) {
      if (u == v) continue;
      EXPECT_NEAR(edge(u, v), a(u, v) / 2.0, 1e-15);
      EXPECT_NEAR(tri(u, v), a(u, v) * a2(u, v) / (2.0 * n), 1e-15);
      const double expected = (a(u, v) * (g.degree(u) + g.degree(v) - 2.0) + a2(u, v)) / (2.0 * n);
      EXPECT_NEAR(wedge(u, v), expected, 1e-15) << u << "," << v;
    }
}

TEST(Counting, RootedCountsPartitionTheTotal) {
  const Graph g = testing::coin_graph(25, 0.45, 9);
  auto shapes = closed_form_shapes();
  for (const auto& m : enumerated_shapes()) shapes.push_back(m);
  for (const Motif& h : shapes) {
    const auto one = one_point_density(h, g);
    const auto total = count_injective(h, g);
    for (int a = 0; a < h.num_vertices(); ++a) {
      std::int64_t s = 0;
      for (auto x : one.raw.by_vertex[a]) s += x;
      EXPECT_EQ(s, total) << h.to_string() << " vertex " << a;
    }
    const auto direct = kernels::rooted_injective(h, g);
    EXPECT_EQ(one.raw.by_vertex, direct.by_vertex) << h.to_string();
    EXPECT_EQ(direct.by_vertex, reference::rooted_injective(h, g).by_vertex) << h.to_string();
    // Mean of t_hat(v) equals k inj / (|Aut| n^k).
    const double n = g.num_vertices();
    EXPECT_NEAR(one.t_hat.mean(),
                h.num_vertices() * static_cast<double>(total) / (h.automorphisms() * std::pow(n, h.num_vertices())),
                1e-14);
  }
}

TEST(Counting, TwoPointMatrixStructure) {
  const Graph g = testing::coin_graph(22, 0.5, 4);
  auto shapes = closed_form_shapes();
  for (const auto& m : enumerated_shapes()) shapes.push_back(m);
  for (const Motif& h : shapes) {
    const Eigen::MatrixXd w = two_point_matrix(h, g);
    EXPECT_LT((w - w.transpose()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_EQ(w.diagonal().cwiseAbs().maxCoeff(), 0.0);
    const int k = h.num_vertices();
    const double n = g.num_vertices();
    const Eigen::MatrixXd pairs = kernels::pair_injective(h, g);
    EXPECT_LT((pairs - reference::pair_injective(h, g)).cwiseAbs().maxCoeff(), 1e-9);
    const Eigen::MatrixXd from_pairs =
        pairs / (2.0 * static_cast<double>(h.automorphisms()) * std::pow(n, k - 2));
    EXPECT_LT((w - from_pairs).cwiseAbs().maxCoeff(), 1e-12) << h.to_string();
    // Every injective map contributes k(k-1) ordered pairs.
    EXPECT_NEAR(pairs.sum(), k * (k - 1.0) * static_cast<double>(count_injective(h, g)), 1e-6);
  }
}

TEST(Counting, EmpiricalRegularity) {
  for (const Motif& h : {edge_motif(), triangle_motif()})
    EXPECT_NEAR(regularity_empirical(h, complete_graph(12)), 0.0, 1e-12);
  EXPECT_THROW(regularity_empirical(triangle_motif(), complete_graph(4)), SizeError);
  // Star graph: strongly degree-irregular.
  std::vector<Edge> star;
  for (int v = 1; v < 20; ++v) star.emplace_back(0, v);
  EXPECT_GT(regularity_empirical(edge_motif(), Graph::from_edges(20, star)), 0.01);
}

TEST(Counting, EmpiricalRegularityOnCompleteBipartite) {
  std::vector<Edge> e;
  for (int u = 0; u < 6; ++u)
    for (int v = 6; v < 12; ++v) e.emplace_back(u, v);
  const double r = regularity_empirical(edge_motif(), Graph::from_edges(12, e));
  // 4 inj(P3)/(n)_3 - 4 t^2 with inj(P3) = 12 * 6 * 5 and t = 72 / 132.
  const double t = 72.0 / 132.0;
  EXPECT_NEAR(r, 4.0 * 360.0 / 1320.0 - 4.0 * t * t, 1e-14);
}

}  // namespace
}  // namespace nm
