#include <benchmark/benchmark.h>

#include "idealfam/catalog.hpp"
#include "idealfam/enumerate.hpp"
#include "idealfam/family.hpp"
#include "idealfam/ideal.hpp"
#include "idealfam/replay.hpp"

using namespace idealfam;

static void BM_Nds(benchmark::State& state) {
  const SetFamily f = random_ideal_family(static_cast<int>(state.range(0)), 42).family();
  for (auto _ : state) {
    benchmark::DoNotOptimize(nds(f));
  }
  state.SetItemsProcessed(state.iterations() * f.edge_count());
}
BENCHMARK(BM_Nds)->Arg(8)->Arg(12)->Arg(16);

static void BM_DegreeSequence(benchmark::State& state) {
  const SetFamily f = random_ideal_family(static_cast<int>(state.range(0)), 42).family();
  for (auto _ : state) {
    benchmark::DoNotOptimize(degree_sequence(f));
  }
}
BENCHMARK(BM_DegreeSequence)->Arg(8)->Arg(12);

static void BM_ValidateIdeal(benchmark::State& state) {
  const SetFamily f = random_ideal_family(static_cast<int>(state.range(0)), 42).family();
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_ideal_violation(f));
  }
  state.SetItemsProcessed(state.iterations() * f.edge_count());
}
BENCHMARK(BM_ValidateIdeal)->Arg(8)->Arg(12)->Arg(16);

static void BM_IntersectionClosure(benchmark::State& state) {
  const SetFamily generators = random_ideal_family(static_cast<int>(state.range(0)), 7).family();
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersection_closure(generators));
  }
}
BENCHMARK(BM_IntersectionClosure)->Arg(6)->Arg(9);

static void BM_RareVertexCertificate(benchmark::State& state) {
  const IdealFamily f = random_ideal_family(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rare_vertex_certificate(f));
  }
}
BENCHMARK(BM_RareVertexCertificate)->Arg(8)->Arg(12);

static void BM_ReplayPowerSet(benchmark::State& state) {
  const IdealFamily f = power_set_ideal(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(replay_induction(f));
  }
}
BENCHMARK(BM_ReplayPowerSet)->Arg(5)->Arg(7);
