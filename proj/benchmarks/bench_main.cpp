#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "flagtutte/cone.hpp"
#include "flagtutte/equivariant.hpp"
#include "flagtutte/invariants.hpp"
#include "flagtutte/polytope.hpp"

using namespace flagtutte;

namespace {

void BM_TutteRankNullity(benchmark::State& state) {
  const Matroid m = fx::non_pappus();
  for (auto _ : state) benchmark::DoNotOptimize(tutte_rank_nullity(m));
}
BENCHMARK(BM_TutteRankNullity)->Unit(benchmark::kMillisecond);

void BM_TutteDeletionContraction(benchmark::State& state) {
  const Matroid m = fx::non_pappus();
  for (auto _ : state) benchmark::DoNotOptimize(tutte_delcon(m));
}
BENCHMARK(BM_TutteDeletionContraction)->Unit(benchmark::kMillisecond);

void BM_TutteActivity(benchmark::State& state) {
  const Matroid m = fx::non_pappus();
  for (auto _ : state) benchmark::DoNotOptimize(tutte_activity(m));
}
BENCHMARK(BM_TutteActivity)->Unit(benchmark::kMillisecond);

void BM_VertexConeSeries(benchmark::State& state) {
  // Hilbert series of the tangent cone at one vertex of the U(k,n) base polytope
  const auto p = base_polytope(Matroid::uniform(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  const IntVec v = p.vertices().front();
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series(cone_at_vertex(p, v)));
}
BENCHMARK(BM_VertexConeSeries)->Args({2, 5})->Args({3, 6})->Args({3, 7})->Unit(benchmark::kMillisecond);

void BM_KTutteUniformFlag(benchmark::State& state) {
  const FlagMatroid f = fx::uniform_flag_23_5();
  for (auto _ : state) benchmark::DoNotOptimize(k_tutte(f));
}
BENCHMARK(BM_KTutteUniformFlag)->Unit(benchmark::kMillisecond);

void BM_KTutteK4(benchmark::State& state) {
  const FlagMatroid f = FlagMatroid::from_constituents({fx::k4()});
  for (auto _ : state) benchmark::DoNotOptimize(k_tutte(f));
}
BENCHMARK(BM_KTutteK4)->Unit(benchmark::kMillisecond);

void BM_KTutteWeights(benchmark::State& state) {
  const FlagMatroid f = fx::uniform_flag_23_5();
  KTutteOptions opt;
  opt.weights = IntVec{0, 1, 3, 7, 12};
  for (auto _ : state) benchmark::DoNotOptimize(k_tutte(f, opt));
}
BENCHMARK(BM_KTutteWeights)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
