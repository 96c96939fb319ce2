#include <benchmark/benchmark.h>

#include "idealfam/enumerate.hpp"

using namespace idealfam;

static void BM_EnumerateIdeal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t families = 0;
  for (auto _ : state) {
    families = 0;
    for_each_ideal_mask(n, [&](CubeMask, std::int64_t, std::int64_t) { ++families; });
    benchmark::DoNotOptimize(families);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * families));
}
BENCHMARK(BM_EnumerateIdeal)->DenseRange(3, 6);

static void BM_EnumerateAntichains(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t families = 0;
  for (auto _ : state) {
    families = 0;
    for_each_ideal_mask_antichain(n, [&](CubeMask, std::int64_t, std::int64_t) { ++families; });
    benchmark::DoNotOptimize(families);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * families));
}
BENCHMARK(BM_EnumerateAntichains)->DenseRange(3, 6);

static void BM_CountDownwardClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_downward_closed(n));
  }
}
BENCHMARK(BM_CountDownwardClosed)->DenseRange(4, 6);

static void BM_VerifyNds(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_ideal_families(n));
  }
}
BENCHMARK(BM_VerifyNds)->DenseRange(4, 6);

static void BM_SearchExhaustive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t hits = 0;
    search_intersection_closed_violations(
        {.n = n, .require_empty = true, .require_ground = true},
        [&](const SetFamily&, std::int64_t) { ++hits; });
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_SearchExhaustive)->Arg(3)->Arg(4);

static void BM_RandomIdealFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_ideal_family(n, ++seed));
  }
}
BENCHMARK(BM_RandomIdealFamily)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
