#include <benchmark/benchmark.h>

#include "labelcor/baselines.hpp"
#include "labelcor/pcor_multivariate.hpp"
#include "labelcor/pcor_univariate.hpp"
#include "labelcor/reference.hpp"
#include "labelcor/rng.hpp"

using namespace labelcor;

namespace {

Dataset make(std::size_t n, std::size_t p) {
  Xoshiro256 rng(17);
  Matrix x(n, p);
  for (auto& v : x.data()) v = rng.normal();
  std::vector<std::int64_t> y(n);
  for (auto& l : y) l = static_cast<std::int64_t>(rng.below(3));
  return Dataset::build(std::move(x), y);
}

void BM_PcorReference(benchmark::State& state) {
  const auto d = make(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(reference::pcor_multivariate(d).pcor_hat);
}

void BM_PcorOmp(benchmark::State& state) {
  const auto d = make(state.range(0), 3);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(pcor_multivariate(d, {.threads = threads}).pcor_hat);
}

void BM_GiniCorReference(benchmark::State& state) {
  const auto d = make(state.range(0), 10);
  for (auto _ : state) benchmark::DoNotOptimize(reference::gini_cor(d));
}

void BM_GiniCorOmp(benchmark::State& state) {
  const auto d = make(state.range(0), 10);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(gini_cor(d, threads));
}

void BM_Univariate(benchmark::State& state) {
  const auto d = make(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(pcor_univariate(d).pcor_hat);
  state.SetComplexityN(state.range(0));
}

void BM_UnivariateBruteforce(benchmark::State& state) {
  const auto d = make(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(pcor_univariate_bruteforce(d));
}

}  // namespace

BENCHMARK(BM_PcorReference)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PcorOmp)->ArgsProduct({{50, 100, 200}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GiniCorReference)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GiniCorOmp)->ArgsProduct({{500, 2000}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Univariate)->RangeMultiplier(4)->Range(256, 1 << 18)->Complexity(benchmark::oNLogN);
BENCHMARK(BM_UnivariateBruteforce)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
