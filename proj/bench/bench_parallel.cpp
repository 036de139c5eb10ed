#include <benchmark/benchmark.h>

#include "hubs/corpus.hpp"
#include "hubs/extremal.hpp"
#include "hubs/minimality.hpp"
#include "hubs/oracle.hpp"

namespace {

hubs::Network oracle_input() {
  hubs::CorpusOptions options;
  options.max_interior = 8;
  options.max_chords = 2;
  return hubs::random_instance({2, 2}, 11, options).planted.network;
}

void BM_OracleSerial(benchmark::State& state) {
  const hubs::Network g = oracle_input();
  for (auto _ : state) benchmark::DoNotOptimize(hubs::min_hub_subgraph_serial(g).min_hubs);
}

void BM_OracleParallel(benchmark::State& state) {
  const hubs::Network g = oracle_input();
  for (auto _ : state) benchmark::DoNotOptimize(hubs::min_hub_subgraph(g).min_hubs);
}

void BM_IsMinimalSerial(benchmark::State& state) {
  const hubs::Network g = hubs::grid_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(0))).network;
  for (auto _ : state) benchmark::DoNotOptimize(hubs::is_minimal_serial(g));
}

void BM_IsMinimalParallel(benchmark::State& state) {
  const hubs::Network g = hubs::grid_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(0))).network;
  for (auto _ : state) benchmark::DoNotOptimize(hubs::is_minimal(g));
}

}  // namespace

BENCHMARK(BM_OracleSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsMinimalSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsMinimalParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
