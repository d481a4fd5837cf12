#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "fredholm/fredholm.hpp"
#include "fredholm/parallel.hpp"
#include "fredholm/reference.hpp"

using namespace fredholm;

namespace {

KernelSpec smooth() {
  return KernelSpec::general({1.0, 5.0}, [](double x, double t) {
    return std::exp(Complex{0.0, x - t}) / (1.0 + x * t);
  });
}

QuadratureRule rule(std::size_t n) { return gauss_rule({1.0, 5.0}, n); }

ComplexMatrix system(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex{u(rng), u(rng)} / static_cast<double>(n);
    m(i, i) += 1.0;
  }
  return m;
}

// d_n for n = 1..order: tensor-product reference against the minor-sum kernel.
void BM_DeterminantSeries_Reference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int order = static_cast<int>(state.range(1));
  const auto k = smooth();
  const auto r = rule(n);
  for (auto _ : state) {
    for (int m = 1; m <= order; ++m) benchmark::DoNotOptimize(reference::determinant_coefficient(k, r, m));
  }
}

void BM_DeterminantSeries_Parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int order = static_cast<int>(state.range(1));
  const auto k = smooth();
  const auto r = rule(n);
  for (auto _ : state) {
    const auto a = parallel::weighted_kernel_matrix(k, r);
    benchmark::DoNotOptimize(parallel::minor_sums(a, order));
  }
}

void BM_FirstMinor_Reference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int order = static_cast<int>(state.range(1));
  const auto k = smooth();
  const auto r = rule(n);
  for (auto _ : state) {
    for (int m = 1; m <= order; ++m) benchmark::DoNotOptimize(reference::minor_coefficient(k, r, 2.0, 3.0, m));
  }
}

void BM_FirstMinor_Parallel(benchmark::State& state) {
  SolverConfig cfg;
  cfg.nodes = static_cast<std::size_t>(state.range(0));
  cfg.series_order_max = static_cast<int>(state.range(1));
  const auto k = smooth();
  for (auto _ : state) benchmark::DoNotOptimize(fredholm_first_minor(k, 2.0, 3.0, 0.5, cfg));
}

void BM_DenseSolve_Reference(benchmark::State& state) {
  const auto m = system(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::vector<Complex> rhs(m.rows(), Complex{1.0, 0.0});
    benchmark::DoNotOptimize(reference::solve_dense(m, rhs));
  }
}

void BM_DenseSolve_Parallel(benchmark::State& state) {
  const auto m = system(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::vector<Complex> rhs(m.rows(), Complex{1.0, 0.0});
    benchmark::DoNotOptimize(parallel::solve_dense(m, rhs));
  }
}

void BM_ResolventSolve(benchmark::State& state) {
  SolverConfig cfg;
  cfg.nodes = static_cast<std::size_t>(state.range(0));
  cfg.series_order_max = 4;
  const auto k = smooth();
  const RealToComplex f = [](double x) { return Complex{std::cos(x), 0.0}; };
  const std::vector<double> grid{1.0, 2.0, 3.0, 4.0, 5.0};
  for (auto _ : state) benchmark::DoNotOptimize(solve_resolvent(k, f, 0.5, grid, cfg));
}

}  // namespace

BENCHMARK(BM_DeterminantSeries_Reference)->Args({8, 3})->Args({16, 3})->Args({12, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeterminantSeries_Parallel)->Args({8, 3})->Args({16, 3})->Args({12, 4})->Args({64, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FirstMinor_Reference)->Args({8, 3})->Args({12, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FirstMinor_Parallel)->Args({8, 3})->Args({12, 3})->Args({64, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DenseSolve_Reference)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DenseSolve_Parallel)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ResolventSolve)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
