#include <benchmark/benchmark.h>

#include "qrook/qcalc.hpp"
#include "qrook/qlaurent.hpp"

using namespace qrook;

static void BM_Multiply(benchmark::State& state) {
  const QLaurent a = q_double_factorial_odd(static_cast<int>(state.range(0)));
  const QLaurent b = q_factorial(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Arg(5)->Arg(10)->Arg(20);

static void BM_DivideExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QLaurent product = q_double_factorial_odd(n) * q_factorial(n);
  const QLaurent divisor = q_factorial(n);
  for (auto _ : state) benchmark::DoNotOptimize(divide_exact(product, divisor));
}
BENCHMARK(BM_DivideExact)->Arg(5)->Arg(10)->Arg(20);

static void BM_HermiteExplicit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hermite_q_explicit(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HermiteExplicit)->Arg(6)->Arg(12);
