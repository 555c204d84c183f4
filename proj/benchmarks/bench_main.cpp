#include <benchmark/benchmark.h>

#include "edgepoly/cycles.hpp"

static void BM_K6Classify(benchmark::State& state) {
  edgepoly::Graph k6 = edgepoly::Graph::complete(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(edgepoly::classify(k6));
  }
}
BENCHMARK(BM_K6Classify);

BENCHMARK_MAIN();
