#include <benchmark/benchmark.h>

#include "mixcurve/sampling.hpp"

using namespace mixcurve;

namespace {

const CurveDef& ellipse() {
  static const CurveDef c = builtin("ellipse-ex1");
  return c;
}

template <Execution E>
void BM_SampleRows(benchmark::State& state) {
  const auto ts = uniform_parameters(ellipse().domain(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sample_rows(ellipse(), {0.0, 4.0 / 3.0}, ts, E));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <Execution E>
void BM_FindEvents(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_events(ellipse(), static_cast<int>(state.range(0)), E));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SampleRows<Execution::Serial>)->Arg(1024)->Arg(16384);
BENCHMARK(BM_SampleRows<Execution::Parallel>)->Arg(1024)->Arg(16384);
BENCHMARK(BM_FindEvents<Execution::Serial>)->Arg(2048)->Arg(32768);
BENCHMARK(BM_FindEvents<Execution::Parallel>)->Arg(2048)->Arg(32768);

BENCHMARK_MAIN();
