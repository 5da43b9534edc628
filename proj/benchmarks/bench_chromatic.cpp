#include <benchmark/benchmark.h>

#include "spectra_chi/chromatic.hpp"
#include "spectra_chi/generators.hpp"
#include "spectra_chi/random.hpp"

using namespace spectra_chi;

static void BM_ChromaticKneser(benchmark::State& state) {
  const Graph g = kneser(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_ChromaticKneser)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_ChromaticClebsch(benchmark::State& state) {
  const Graph g = clebsch();
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_ChromaticClebsch)->Unit(benchmark::kMillisecond);

static void BM_ChromaticRandom(benchmark::State& state) {
  Rng rng(kDefaultSeed);
  const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_ChromaticRandom)->DenseRange(20, 40, 10)->Unit(benchmark::kMillisecond);

static void BM_CliqueHoffmanSingleton(benchmark::State& state) {
  const Graph g = hoffman_singleton();
  for (auto _ : state) benchmark::DoNotOptimize(clique_number(g));
}
BENCHMARK(BM_CliqueHoffmanSingleton)->Unit(benchmark::kMicrosecond);
