#include <benchmark/benchmark.h>

#include "cyclepow/bounds.hpp"
#include "cyclepow/cycle.hpp"
#include "cyclepow/extremal.hpp"
#include "cyclepow/search.hpp"

namespace {

void BM_EdgeCountInterval(benchmark::State& state) {
  const cyclepow::GraphSpec spec(1000, 462);
  const cyclepow::VertexSubset u = cyclepow::interval(spec, 0, 473);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclepow::edge_count(spec, u));
  }
}
BENCHMARK(BM_EdgeCountInterval);

void BM_ExactMax(benchmark::State& state) {
  const cyclepow::GraphSpec spec(1000, 37);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclepow::exact_max(spec, 54).value);
  }
}
BENCHMARK(BM_ExactMax);

void BM_Lambda2(benchmark::State& state) {
  const cyclepow::GraphSpec spec(1000, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclepow::lambda2(spec));
  }
}
BENCHMARK(BM_Lambda2)->Arg(16)->Arg(63)->Arg(462);

void BM_BruteForceMax(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cyclepow::GraphSpec spec(n, 3);
  cyclepow::SearchOptions options;
  options.jobs = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cyclepow::brute_force_max(spec, n / 2, options).max_edges);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BruteForceMax)->Arg(16)->Arg(20)->Arg(22);

void BM_BruteForceMaxParallel(benchmark::State& state) {
  const cyclepow::GraphSpec spec(24, 3);
  cyclepow::SearchOptions options;
  options.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclepow::brute_force_max(spec, 12, options).max_edges);
  }
}
BENCHMARK(BM_BruteForceMaxParallel)->Arg(1)->Arg(2)->Arg(4);

void BM_VerifyGrid(benchmark::State& state) {
  const int max_n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclepow::verify_grid(max_n).cases);
  }
}
BENCHMARK(BM_VerifyGrid)->Arg(8)->Arg(12);

void BM_SpectralIdentity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cyclepow::GraphSpec spec(n, 5);
  const cyclepow::VertexSubset u = cyclepow::interval(spec, 0, n / 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclepow::spectral_identity(spec, u).sum_c_sq);
  }
}
BENCHMARK(BM_SpectralIdentity)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
