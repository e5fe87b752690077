#include <benchmark/benchmark.h>

#include "jacobi/basis.hpp"
#include "jacobi/generators.hpp"
#include "jacobi/lifts.hpp"

using namespace jacobi;

static void BM_SeriesMul(benchmark::State &state) {
  const std::int64_t qprec = 24 * state.range(0);
  JacobiForm a = generator(Generator::Phi01, qprec), b = generator(Generator::Phi03, qprec);
  for (auto _ : state) benchmark::DoNotOptimize((a * b).series.size());
}
BENCHMARK(BM_SeriesMul)->Arg(10)->Arg(20)->Arg(40);

static void BM_Basis(benchmark::State &state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int n = 1; n <= m; ++n) benchmark::DoNotOptimize(basis_psi(m, n, 24 * 4).series.size());
}
BENCHMARK(BM_Basis)->Arg(6)->Arg(12);

static void BM_ExpLift(benchmark::State &state) {
  const std::int64_t n = state.range(0);
  JacobiForm phi = generator(Generator::Phi02, 24 * (n * n + 1));
  for (auto _ : state) benchmark::DoNotOptimize(exp_lift(phi, n, n).series.size());
}
BENCHMARK(BM_ExpLift)->Arg(3)->Arg(5)->Arg(7);

static void BM_ThetaProduct(benchmark::State &state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(theta_product(n, n).series.size());
}
BENCHMARK(BM_ThetaProduct)->Arg(2)->Arg(4);
BENCHMARK_MAIN();
