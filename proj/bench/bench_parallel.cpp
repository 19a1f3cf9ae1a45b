#include <benchmark/benchmark.h>

#include <vector>

#include "chgoe/distributions.hpp"
#include "chgoe/montecarlo.hpp"

namespace {

std::vector<double> grid(int n, double hi) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = hi * (i + 1) / n;
  return v;
}

void BM_TabulateSerial(benchmark::State& state) {
  const auto g = grid(64, 3.0);
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chgoe::tabulate_serial(chgoe::Quantity::SmallestFinite, p, 2, g));
}

void BM_TabulateParallel(benchmark::State& state) {
  const auto g = grid(64, 3.0);
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chgoe::tabulate(chgoe::Quantity::SmallestFinite, p, 2, g));
}

chgoe::SamplerConfig mc_config(int p) {
  chgoe::SamplerConfig c;
  c.p = p;
  c.n = p + 4;
  c.num_samples = 2000;
  c.seed = 1;
  return c;
}

void BM_SampleSerial(benchmark::State& state) {
  const auto c = mc_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chgoe::sample_batch_serial(c));
}

void BM_SampleParallel(benchmark::State& state) {
  const auto c = mc_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chgoe::sample_batch(c));
}

}  // namespace

BENCHMARK(BM_TabulateSerial)->Arg(10)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TabulateParallel)->Arg(10)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleSerial)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleParallel)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
