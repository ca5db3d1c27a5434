// Serial reference vs OpenMP sampling, and a scenario batch run serially
// vs through run_batch.

#include <benchmark/benchmark.h>

#include "bbfm/behaviors.hpp"
#include "bbfm/fusion.hpp"
#include "bbfm/harness.hpp"
#include "bbfm/kernels.hpp"

using namespace bbfm;

namespace {

AggregatedMembership busy_output() {
  // Many rules fire at moderate distances, so many parts survive.
  const auto oa = build_obstacle_avoidance();
  return oa.rules.evaluate({{"d_l", 1.1}, {"d_f", 1.2}, {"d_r", 1.0}, {"alpha", 0.3}}).at("omega");
}

void BM_SampleSerial(benchmark::State& st) {
  const auto agg = busy_output();
  const auto grid = make_grid(-4.3, 4.3, 8.6 / static_cast<double>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::sample_serial(agg, grid));
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(grid.size()));
}

void BM_SampleParallel(benchmark::State& st) {
  const auto agg = busy_output();
  const auto grid = make_grid(-4.3, 4.3, 8.6 / static_cast<double>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::sample_parallel(agg, grid));
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(grid.size()));
}

std::vector<ScenarioConfig> batch() {
  std::vector<ScenarioConfig> v;
  for (const auto* n : {"open-field", "corridor", "obstacle-field", "office-like"}) {
    for (auto s : {Strategy::Bbfm, Strategy::DefuzzifyThenCombine, Strategy::CombineThenDefuzzify}) {
      auto sc = bundled_scenario(n);
      sc.strategy = s;
      v.push_back(sc);
    }
  }
  return v;
}

void BM_ScenariosSerial(benchmark::State& st) {
  const auto list = batch();
  for (auto _ : st) {
    for (const auto& sc : list) benchmark::DoNotOptimize(run_scenario(sc));
  }
}

void BM_ScenariosBatch(benchmark::State& st) {
  const auto list = batch();
  for (auto _ : st) benchmark::DoNotOptimize(run_batch(list));
}

}  // namespace

BENCHMARK(BM_SampleSerial)->RangeMultiplier(10)->Range(860, 860000);
BENCHMARK(BM_SampleParallel)->RangeMultiplier(10)->Range(860, 860000);
BENCHMARK(BM_ScenariosSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ScenariosBatch)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
