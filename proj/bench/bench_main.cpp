#include <benchmark/benchmark.h>

#include <random>

#include "rado/counting.hpp"
#include "rado/density.hpp"
#include "rado/greedy.hpp"
#include "rado/search.hpp"

namespace {

using namespace rado;

Coloring random_coloring(int n, int r) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> pick(0, r - 1);
  std::vector<Color> c(static_cast<std::size_t>(n));
  for (Color& x : c) x = static_cast<Color>(pick(rng));
  return Coloring(std::move(c), r);
}

void BM_count_serial(benchmark::State& state) {
  const Coloring c = random_coloring(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(count_triples_serial(c, 1));
}

void BM_count_omp(benchmark::State& state) {
  const Coloring c = random_coloring(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(count_triples(c, 1, static_cast<int>(state.range(1))));
}

void BM_density_serial(benchmark::State& state) {
  const BlockPattern p = greedy_optimize(1, 4).final_pattern;
  for (auto _ : state) benchmark::DoNotOptimize(mono_density_serial(p, 1));
}

void BM_density_omp(benchmark::State& state) {
  const BlockPattern p = greedy_optimize(1, 4).final_pattern;
  for (auto _ : state) benchmark::DoNotOptimize(mono_density(p, 1, static_cast<int>(state.range(0))));
}

void BM_exact_min_reference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exact_min_reference(static_cast<int>(state.range(0)), 2, 2));
}

void BM_exact_min(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(exact_min(static_cast<int>(state.range(0)), 2, 2, {static_cast<int>(state.range(1))}));
}

}  // namespace

BENCHMARK(BM_count_serial)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_count_omp)->ArgsProduct({{2000, 20000}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_density_serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_density_omp)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_exact_min_reference)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_exact_min)->ArgsProduct({{16, 20}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
