#include <benchmark/benchmark.h>

#include <random>

#include "trajsmooth/evaluator.hpp"
#include "trajsmooth/parallel.hpp"
#include "trajsmooth/sparse.hpp"
#include "trajsmooth/synthetic.hpp"

using namespace trajsmooth;

namespace {

void BM_EvalBatch(benchmark::State& state) {
  const auto ticks = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  CoeffMatrix c{Layout::Eulerian, {}};
  for (int i = 0; i < 1000; ++i) c.rows.push_back({d(rng), d(rng), d(rng), d(rng)});
  const auto w = power_matrix(ticks);
  for (auto _ : state) benchmark::DoNotOptimize(eval_batch(c, *w));
  state.SetItemsProcessed(state.iterations() * 1000 * static_cast<std::int64_t>(ticks + 1));
}

void BM_Build(benchmark::State& state) {
  const TrajectorySet set = make_synthetic_set(static_cast<std::size_t>(state.range(0)), 13, 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_set(set, {}));
}

void BM_BuildGlobal(benchmark::State& state) {
  const TrajectorySet set = make_synthetic_set(static_cast<std::size_t>(state.range(0)), 13, 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_set_global(set, {}));
}

void BM_Pipeline(benchmark::State& state) {
  const TrajectorySet set = make_synthetic_set(2000, 13, 1);
  const auto workers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(set, {{}, 200}, workers));
}

}  // namespace

BENCHMARK(BM_EvalBatch)->RangeMultiplier(2)->Range(25, 400);
BENCHMARK(BM_Build)->RangeMultiplier(10)->Range(10, 10000);
BENCHMARK(BM_BuildGlobal)->RangeMultiplier(10)->Range(10, 10000);
BENCHMARK(BM_Pipeline)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
