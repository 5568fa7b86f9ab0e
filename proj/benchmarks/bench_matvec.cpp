#include <benchmark/benchmark.h>

#include <random>

#include "trajsmooth/sparse.hpp"

using namespace trajsmooth;

namespace {

std::vector<double> stacked_input(std::size_t m) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  StackedVector s;
  s.reserve(m);
  for (std::size_t i = 0; i < m; ++i) s.append(d(rng), d(rng), d(rng), d(rng));
  return {s.values().begin(), s.values().end()};
}

void BM_MatvecBlock(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const GlobalMatrix g = assemble_global(m);
  const auto s = stacked_input(m);
  for (auto _ : state) benchmark::DoNotOptimize(matvec_block(g, s));
  state.counters["flops"] = benchmark::Counter(20.0 * static_cast<double>(m), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_MatvecCsr(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const CsrMatrix csr = expand_csr(assemble_global(m));
  const auto s = stacked_input(m);
  for (auto _ : state) benchmark::DoNotOptimize(matvec_csr(csr, s));
}

void BM_MatvecDense(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const DenseMatrix dense = expand_dense(assemble_global(m));
  const auto s = stacked_input(m);
  for (auto _ : state) benchmark::DoNotOptimize(matvec_dense(dense, s));
}

}  // namespace

BENCHMARK(BM_MatvecBlock)->RangeMultiplier(10)->Range(10, 10000);
BENCHMARK(BM_MatvecCsr)->RangeMultiplier(10)->Range(10, 10000);
BENCHMARK(BM_MatvecDense)->RangeMultiplier(10)->Range(10, 1000);
