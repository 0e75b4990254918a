#include <benchmark/benchmark.h>

#include "bockstein/exotic.hpp"

using namespace bockstein;

static void BM_Boxplus(benchmark::State& state) {
  auto [d1, d2] = paper_witness_decomposition(8);
  for (auto _ : state) benchmark::DoNotOptimize(boxplus(d1, d2));
}
BENCHMARK(BM_Boxplus);

static void BM_SearchDecomposition(benchmark::State& state) {
  SearchBounds bounds;
  bounds.max_value = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_decomposition(5, bounds));
}
BENCHMARK(BM_SearchDecomposition)->Arg(4)->Arg(5)->Arg(6);

static void BM_VerifyPaper(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_paper());
}
BENCHMARK(BM_VerifyPaper);

BENCHMARK_MAIN();
