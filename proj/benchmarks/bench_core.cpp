#include <benchmark/benchmark.h>

#include "dslab/approx_sets.hpp"
#include "dslab/counting.hpp"
#include "dslab/monte_carlo.hpp"
#include "dslab/variance.hpp"

using namespace dslab;

static void BM_SieveBuild(benchmark::State& state) {
  uint32_t n = static_cast<uint32_t>(state.range(0));
  for (auto _ : state) {
    FactorSieve sieve(n);
    benchmark::DoNotOptimize(sieve.phi(n));
  }
}
BENCHMARK(BM_SieveBuild)->Arg(100000)->Arg(1000000);

static void BM_PairOverlapFast(benchmark::State& state) {
  uint32_t Q = static_cast<uint32_t>(state.range(0));
  FactorSieve sieve(Q);
  PsiTable psi = PsiTable::constant(Q, frac(1, 2));
  uint64_t q = 1;
  for (auto _ : state) {
    uint32_t a = static_cast<uint32_t>(q % (Q - 1)) + 1;
    uint32_t b = Q - static_cast<uint32_t>(q % 97);
    benchmark::DoNotOptimize(pair_overlap_1d(a, b, psi, sieve));
    ++q;
  }
}
BENCHMARK(BM_PairOverlapFast)->Arg(1024)->Arg(2048);

static void BM_PairOverlapGeneric(benchmark::State& state) {
  uint32_t Q = static_cast<uint32_t>(state.range(0));
  FactorSieve sieve(Q);
  PsiTable psi = PsiTable::power_law(Q, Rat(2));  // 53-bit dyadics, generic path
  uint64_t q = 1;
  for (auto _ : state) {
    uint32_t a = static_cast<uint32_t>(q % (Q - 1)) + 1;
    uint32_t b = Q - static_cast<uint32_t>(q % 97);
    benchmark::DoNotOptimize(pair_overlap_1d(a, b, psi, sieve));
    ++q;
  }
}
BENCHMARK(BM_PairOverlapGeneric)->Arg(512);

static void BM_IntervalIntersect(benchmark::State& state) {
  uint32_t Q = static_cast<uint32_t>(state.range(0));
  FactorSieve sieve(Q);
  PsiTable psi = PsiTable::constant(Q, frac(1, 2));
  IntervalUnion a = build_Aq(Q - 1, psi, sieve);
  IntervalUnion b = build_Aq(Q, psi, sieve);
  for (auto _ : state) benchmark::DoNotOptimize(intersect(a, b).measure());
}
BENCHMARK(BM_IntervalIntersect)->Arg(512)->Arg(2048);

static void BM_CountSolutions(benchmark::State& state) {
  uint32_t Q = static_cast<uint32_t>(state.range(0));
  FactorSieve sieve(Q);
  PsiTable psi = PsiTable::constant(Q, frac(1, 2));
  std::vector<Rat> alpha{frac(355, 1130), frac(2721, 10000)};
  for (auto _ : state) benchmark::DoNotOptimize(count_solutions(alpha, Q, psi, sieve).count);
}
BENCHMARK(BM_CountSolutions)->Arg(300);

static void BM_MonteCarlo(benchmark::State& state) {
  uint32_t Q = 200;
  FactorSieve sieve(Q);
  PsiTable psi = PsiTable::constant(Q, frac(1, 2));
  uint64_t n = static_cast<uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo(Q, psi, sieve, 2, n, 42).sample_mean);
}
BENCHMARK(BM_MonteCarlo)->Arg(10000);

static void BM_ExactVariance(benchmark::State& state) {
  uint32_t Q = static_cast<uint32_t>(state.range(0));
  FactorSieve sieve(Q);
  PsiTable psi = PsiTable::constant(Q, frac(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(exact_variance(Q, psi, sieve, 2).variance);
}
BENCHMARK(BM_ExactVariance)->Arg(128)->Arg(256);

BENCHMARK_MAIN();
