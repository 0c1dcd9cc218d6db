#include <benchmark/benchmark.h>

#include "rk/certifier.hpp"
#include "rk/uniqueness.hpp"

namespace {

void BM_Propagate(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const int n = static_cast<int>(rk::certified_size_bound(q, 4));
  const rk::LatticeDims dims(n, n);
  const auto slopes = rk::slope_prefix(rk::Slope::integer(-q));
  for (auto _ : state)
    benchmark::DoNotOptimize(rk::propagate(dims, slopes, {}).determined_count());
  state.counters["n"] = n;
}
BENCHMARK(BM_Propagate)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_PropagateWithTranspose(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const int n = static_cast<int>(rk::certified_size_bound(q, 4));
  const rk::LatticeDims dims(n, n);
  const auto slopes = rk::slope_prefix(rk::Slope::integer(-q));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        rk::propagate_with_transforms(dims, slopes, {},
                                      {rk::GridTransform::transpose})
            .determined_count());
  state.counters["n"] = n;
}
BENCHMARK(BM_PropagateWithTranspose)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_EntryUniquenessMask(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const rk::LatticeDims dims(n, n);
  const auto slopes = rk::slope_prefix(rk::slope_at_index(state.range(1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        rk::entry_uniqueness_mask(dims, slopes).unique_count());
}
BENCHMARK(BM_EntryUniquenessMask)
    ->Args({6, 4})
    ->Args({10, 7})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
