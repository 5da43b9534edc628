#include <benchmark/benchmark.h>

#include "spectra_chi/generators.hpp"
#include "spectra_chi/quantum.hpp"

using namespace spectra_chi;

static void BM_VerifyOmega(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  OrthogonalityOptions quiet;
  quiet.notice = [](std::string_view) {};
  const Graph g = orthogonality_graph(n, quiet);
  const QuantumColoring qc = omega_coloring(n);
  for (auto _ : state) benchmark::DoNotOptimize(verify(g, qc));
}
BENCHMARK(BM_VerifyOmega)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_PinchingDenseOmega4(benchmark::State& state) {
  const Graph g = orthogonality_graph(4);
  const QuantumColoring qc = omega_coloring(4);
  for (auto _ : state) benchmark::DoNotOptimize(pinching_residual_dense(g, qc));
}
BENCHMARK(BM_PinchingDenseOmega4)->Unit(benchmark::kMillisecond);

static void BM_BlockProjectorsOmega4(benchmark::State& state) {
  const QuantumColoring qc = omega_coloring(4);
  for (auto _ : state) benchmark::DoNotOptimize(block_projectors(qc));
}
BENCHMARK(BM_BlockProjectorsOmega4)->Unit(benchmark::kMillisecond);
