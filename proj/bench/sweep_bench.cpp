// Serial vs OpenMP sweep over the same grid. Cells are independent, so the
// parallel path should approach linear speedup once the grid is large enough
// to amortize the thread start.

#include <benchmark/benchmark.h>

#include "dbubble/sweep.hpp"

namespace {

using dbubble::SweepOptions;

SweepOptions construct_only() {
  SweepOptions opt;
  opt.withOracle = false;
  opt.cache = nullptr;
  return opt;
}

void BM_SweepSerial(benchmark::State& state) {
  long long nMax = state.range(0);
  auto opt = construct_only();
  for (auto _ : state) {
    auto rows = dbubble::sweep_cells_serial(nMax, nMax, opt);
    benchmark::DoNotOptimize(rows.data());
  }
  state.SetItemsProcessed(state.iterations() * nMax * (nMax + 1) / 2);
}

void BM_SweepParallel(benchmark::State& state) {
  long long nMax = state.range(0);
  auto opt = construct_only();
  opt.parallel = true;
  for (auto _ : state) {
    auto rows = dbubble::sweep_cells(nMax, nMax, opt);
    benchmark::DoNotOptimize(rows.data());
  }
  state.SetItemsProcessed(state.iterations() * nMax * (nMax + 1) / 2);
}

void BM_SweepSerialWithOracle(benchmark::State& state) {
  SweepOptions opt;
  opt.withOracle = true;
  opt.cache = nullptr;
  for (auto _ : state) {
    auto rows = dbubble::sweep_cells_serial(6, 6, opt);
    benchmark::DoNotOptimize(rows.data());
  }
}

void BM_SweepParallelWithOracle(benchmark::State& state) {
  SweepOptions opt;
  opt.withOracle = true;
  opt.cache = nullptr;
  for (auto _ : state) {
    auto rows = dbubble::sweep_cells(6, 6, opt);
    benchmark::DoNotOptimize(rows.data());
  }
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerialWithOracle)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallelWithOracle)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
