// Serial reference kernels against their OpenMP twins.

#include <benchmark/benchmark.h>

#include "bmlab/galvin.hpp"
#include "bmlab/kernels.hpp"
#include "bmlab/poset_enum.hpp"

namespace {

template <bool Parallel>
void BM_survey(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto r = Parallel ? bmlab::survey_posets(n, true) : bmlab::reference::survey_posets(n, true);
    benchmark::DoNotOptimize(r);
  }
}

// n/2 disjoint two-element chains: every top can be dropped, so many subsets are dense.
bmlab::FinitePoset paired_chains(std::size_t n) {
  std::vector<bmlab::Mask> below(n);
  for (std::size_t i = 0; i < n; ++i) below[i] = bmlab::bit(i) | (i % 2 ? bmlab::bit(i - 1) : 0);
  return bmlab::poset_from_below(below);
}

template <bool Parallel>
void BM_exhaustive(benchmark::State& state) {
  const auto P = paired_chains(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto r = Parallel ? bmlab::exhaustive_min_noetherian(P) : bmlab::reference::exhaustive_min_noetherian(P);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void BM_galvin(benchmark::State& state) {
  const auto games = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto r = Parallel ? bmlab::galvin_batch(7, games, 16, "closure")
                      : bmlab::reference::galvin_batch(7, games, 16, "closure");
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK_TEMPLATE(BM_survey, false)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_survey, true)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_exhaustive, false)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_exhaustive, true)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_galvin, false)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_galvin, true)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
