#include <benchmark/benchmark.h>

#include "spectra_chi/bounds.hpp"
#include "spectra_chi/generators.hpp"
#include "spectra_chi/random.hpp"
#include "spectra_chi/spectral.hpp"

using namespace spectra_chi;

static void BM_JacobiHoffmanSingleton(benchmark::State& state) {
  const SymmetricMatrix a = adjacency_matrix(hoffman_singleton());
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_symmetric(a));
}
BENCHMARK(BM_JacobiHoffmanSingleton)->Unit(benchmark::kMillisecond);

static void BM_JacobiKneser(benchmark::State& state) {
  const SymmetricMatrix a = adjacency_matrix(kneser(static_cast<int>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_symmetric(a));
  state.SetLabel(std::to_string(a.order()) + " vertices");
}
BENCHMARK(BM_JacobiKneser)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_JacobiOmega8(benchmark::State& state) {
  OrthogonalityOptions quiet;
  quiet.notice = [](std::string_view) {};
  const SymmetricMatrix a = adjacency_matrix(orthogonality_graph(8, quiet));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_symmetric(a));
}
BENCHMARK(BM_JacobiOmega8)->Unit(benchmark::kSecond)->Iterations(1);

static void BM_HermitianRandom(benchmark::State& state) {
  Rng rng(kDefaultSeed);
  const HermitianMatrix x = random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_hermitian(x));
}
BENCHMARK(BM_HermitianRandom)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

static void BM_BoundsReportClebsch(benchmark::State& state) {
  const Graph g = clebsch();
  for (auto _ : state) benchmark::DoNotOptimize(bounds_report(g));
}
BENCHMARK(BM_BoundsReportClebsch)->Unit(benchmark::kMicrosecond);
