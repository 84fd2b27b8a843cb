// OpenMP kernels against their serial references on W-random graphs.
#include <benchmark/benchmark.h>

#include <map>

#include "netmoments/fixtures.hpp"
#include "netmoments/graphon.hpp"
#include "netmoments/kernels.hpp"
#include "netmoments/rng.hpp"

namespace {

const nm::Graph& bench_graph(int n) {
  static std::map<int, nm::Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, nm::sample_graph(nm::constant_graphon(0.5), n, 42)).first;
  return it->second;
}

Eigen::MatrixXd multipliers(int n, int cols) {
  nm::Rng rng(7);
  Eigen::MatrixXd z(n, cols);
  for (Eigen::Index i = 0; i < z.size(); ++i) z.data()[i] = rng.normal();
  return z;
}

void BM_CommonNeighbors_Omp(benchmark::State& st) {
  const auto& g = bench_graph(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(nm::kernels::common_neighbors(g));
}
void BM_CommonNeighbors_Serial(benchmark::State& st) {
  const auto& g = bench_graph(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(nm::reference::common_neighbors(g));
}

// K4 has no closed form, so both paths enumerate.
void BM_InjectiveK4_Omp(benchmark::State& st) {
  const auto& g = bench_graph(static_cast<int>(st.range(0)));
  const auto h = nm::Motif::complete(4);
  for (auto _ : st) benchmark::DoNotOptimize(nm::kernels::count_injective(h, g));
}
void BM_InjectiveK4_Serial(benchmark::State& st) {
  const auto& g = bench_graph(static_cast<int>(st.range(0)));
  const auto h = nm::Motif::complete(4);
  for (auto _ : st) benchmark::DoNotOptimize(nm::reference::count_injective(h, g));
}

void BM_QuadraticForms_Omp(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const Eigen::MatrixXd m = bench_graph(n).adjacency_matrix();
  const Eigen::MatrixXd z = multipliers(n, 1000);
  for (auto _ : st) benchmark::DoNotOptimize(nm::kernels::quadratic_forms(m, z));
}
void BM_QuadraticForms_Serial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const Eigen::MatrixXd m = bench_graph(n).adjacency_matrix();
  const Eigen::MatrixXd z = multipliers(n, 1000);
  for (auto _ : st) benchmark::DoNotOptimize(nm::reference::quadratic_forms(m, z));
}

}  // namespace

BENCHMARK(BM_CommonNeighbors_Omp)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CommonNeighbors_Serial)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InjectiveK4_Omp)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InjectiveK4_Serial)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuadraticForms_Omp)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuadraticForms_Serial)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
