#include <benchmark/benchmark.h>

#include "qrook/board.hpp"
#include "qrook/involution.hpp"
#include "qrook/kerov.hpp"
#include "qrook/psi.hpp"

using namespace qrook;

static void BM_PsiRoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto involutions = enumerate_involutions(n, n / 2);
  for (auto _ : state) {
    for (const auto& a : involutions) benchmark::DoNotOptimize(psi_inv(psi(a)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(involutions.size()));
}
BENCHMARK(BM_PsiRoundTrip)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_KappaRoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<RookPlacement> placements;
  for_each_rc(n, 3, -1, [&](const RookPlacement& p) { placements.push_back(p); });
  for (auto _ : state) {
    for (const auto& p : placements) benchmark::DoNotOptimize(kappa_inv(kappa(p)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(placements.size()));
}
BENCHMARK(BM_KappaRoundTrip)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
