// Serial reference kernels against their OpenMP versions.
//   ./zdg_bench --benchmark_filter=Gamma
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <map>

#include "zdg/cycles.hpp"
#include "zdg/graph.hpp"

using namespace zdg;

namespace {

const Graph& gamma_of(Int n) {
  static std::map<Int, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, zero_divisor_graph(make_ring(n, RingKind::ZnGaussian))).first;
  return it->second;
}

void BM_GammaSerial(benchmark::State& st) {
  const RingSpec ring = make_ring(st.range(0), RingKind::ZnGaussian);
  for (auto _ : st) benchmark::DoNotOptimize(serial::zero_divisor_graph(ring));
}
void BM_GammaParallel(benchmark::State& st) {
  const RingSpec ring = make_ring(st.range(0), RingKind::ZnGaussian);
  for (auto _ : st) benchmark::DoNotOptimize(zero_divisor_graph(ring));
}

void BM_ComplementSerial(benchmark::State& st) {
  const Graph& g = gamma_of(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(serial::complement(g));
}
void BM_ComplementParallel(benchmark::State& st) {
  const Graph& g = gamma_of(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(complement(g));
}

void BM_LineSerial(benchmark::State& st) {
  const Graph& g = gamma_of(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(serial::line_graph(g));
}
void BM_LineParallel(benchmark::State& st) {
  const Graph& g = gamma_of(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(line_graph(g));
}

// Search-only spectrum: no closed forms, no heuristics.
SpectrumOptions search_only() {
  SpectrumOptions o;
  o.use_shortcuts = false;
  o.use_heuristics = false;
  return o;
}

void BM_SpectrumSerial(benchmark::State& st) {
  const Graph& g = gamma_of(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(serial::cycle_spectrum(g, search_only()));
}
void BM_SpectrumParallel(benchmark::State& st) {
  const Graph& g = gamma_of(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(cycle_spectrum(g, search_only()));
}

}  // namespace

BENCHMARK(BM_GammaSerial)->Arg(25)->Arg(45)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GammaParallel)->Arg(25)->Arg(45)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComplementSerial)->Arg(25)->Arg(45)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComplementParallel)->Arg(25)->Arg(45)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LineSerial)->Arg(15)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LineParallel)->Arg(15)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectrumSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectrumParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
