#include <random>

#include <benchmark/benchmark.h>

#include "sgevp/decomposition.hpp"
#include "sgevp/fractional_1d.hpp"
#include "sgevp/problems.hpp"
#include "sgevp/qfp.hpp"
#include "sgevp/subproblem.hpp"
#include "sgevp/working_set.hpp"

namespace {

using namespace sgevp;

Matrix gaussian(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = normal(rng);
  return m;
}

// Random A and a well-conditioned C.
ProblemInstance random_instance(Index n, Index s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Matrix a = gaussian(n, n, rng);
  const Matrix b = gaussian(n, n, rng);
  Matrix c = b * b.transpose() / static_cast<double>(n);
  c.diagonal().array() += 0.2;
  return ProblemInstance(SymMatrix(a), SymMatrix(c), s);
}

Vector random_sparse_point(Index n, Index s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Vector x = Vector::Zero(n);
  for (Index i = 0; i < s; ++i) x(i * (n / s)) = normal(rng);
  return x;
}

void BM_Solve1d(benchmark::State& state) {
  OneDimCoefficients c;
  c.a = -1.3;
  c.b = 0.7;
  c.c = 2.1;
  c.r = 1.4;
  c.s = -0.2;
  c.t = 0.9;
  for (auto _ : state) benchmark::DoNotOptimize(solve_1d(c).value);
}
BENCHMARK(BM_Solve1d);

void BM_Bisection(benchmark::State& state) {
  const Index m = state.range(0);
  const ProblemInstance prob = random_instance(m + 4, m + 4, 7);
  const Vector x = random_sparse_point(m + 4, m + 4, 8);
  IndexList block(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) block[static_cast<std::size_t>(i)] = i;
  const QfpSubproblem q = build_block_subproblem(prob, x, block, 1e-5).qfp;
  for (auto _ : state) benchmark::DoNotOptimize(solve_bisection(q).value);
}
BENCHMARK(BM_Bisection)->Arg(2)->Arg(6)->Arg(12);

void BM_CoordinateDescent(benchmark::State& state) {
  const Index m = state.range(0);
  const ProblemInstance prob = random_instance(m + 4, m + 4, 9);
  const Vector x = random_sparse_point(m + 4, m + 4, 10);
  IndexList block(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) block[static_cast<std::size_t>(i)] = i;
  const QfpSubproblem q = build_block_subproblem(prob, x, block, 1e-5).qfp;
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_coordinate_descent(q, default_start(q)).value);
}
BENCHMARK(BM_CoordinateDescent)->Arg(2)->Arg(6)->Arg(12);

void BM_SolveExact(benchmark::State& state) {
  const Index n = 40;
  const Index s = state.range(0);
  const ProblemInstance prob = random_instance(n, s, 11);
  const Vector x = random_sparse_point(n, s, 12);
  IndexList block(12);
  for (Index i = 0; i < 12; ++i) block[static_cast<std::size_t>(i)] = 3 * i + 1;
  const BlockSubproblem sub = build_block_subproblem(prob, x, block, 1e-5);
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(sub).value);
}
BENCHMARK(BM_SolveExact)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_SwapTable(benchmark::State& state) {
  const Index n = state.range(0);
  const ProblemInstance prob = random_instance(n, 10, 13);
  const Vector x = random_sparse_point(n, 10, 14);
  for (auto _ : state) benchmark::DoNotOptimize(swap_descent_table(prob, x).size());
}
BENCHMARK(BM_SwapTable)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_DecompositionPca(benchmark::State& state) {
  const Dataset data = gen_randn(300, 100, 1);
  const ProblemInstance prob = build_pca(data, state.range(0));
  DecompositionConfig cfg;
  cfg.max_iters = 20;
  cfg.epsilon = 0.0;
  for (auto _ : state) benchmark::DoNotOptimize(solve(prob, cfg).objective);
  state.SetItemsProcessed(state.iterations() * cfg.max_iters);
}
BENCHMARK(BM_DecompositionPca)->Arg(8)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
