#include <benchmark/benchmark.h>

#include "qrook/identities.hpp"
#include "qrook/qcalc.hpp"

using namespace qrook;

static void BM_ConjectureLhs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(conjecture_lhs(static_cast<int>(state.range(0)), 5));
}
BENCHMARK(BM_ConjectureLhs)->Arg(4)->Arg(7)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_ConjectureLhsByBoards(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(conjecture_lhs_by_boards(static_cast<int>(state.range(0)), 5));
}
BENCHMARK(BM_ConjectureLhsByBoards)->Arg(4)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_ConjectureRhs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(conjecture_rhs(static_cast<int>(state.range(0)), 5));
}
BENCHMARK(BM_ConjectureRhs)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_FMoment(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(f_moment(static_cast<int>(state.range(0)), 5));
}
BENCHMARK(BM_FMoment)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
