#include <benchmark/benchmark.h>

#include "rk/clue_matrix.hpp"
#include "rk/linalg.hpp"
#include "rk/uniqueness.hpp"

namespace {

rk::RationalMatrix clue_system(int n, std::int64_t prefix_index) {
  return rk::RationalMatrix::from_clue_matrix(rk::build_coefficient_matrix(
      rk::LatticeDims(n, n), rk::slope_prefix(rk::slope_at_index(prefix_index))));
}

void BM_ExactRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto m = clue_system(n, state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(rk::rank(m));
  state.counters["rows"] = m.rows();
  state.counters["cols"] = m.cols();
}
BENCHMARK(BM_ExactRank)
    ->Args({6, 5})    // 6x6 through -2
    ->Args({9, 7})    // 9x9 through 2
    ->Args({12, 8})   // 12x12 through -1/3
    ->Unit(benchmark::kMillisecond);

void BM_FullRankCertificate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto m = clue_system(n, state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(rk::has_full_column_rank(m));
  state.counters["rows"] = m.rows();
}
BENCHMARK(BM_FullRankCertificate)
    ->Args({9, 7})
    ->Args({17, 11})  // 17x17 through 3
    ->Unit(benchmark::kMillisecond);

void BM_Nullspace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto m = clue_system(n, state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(rk::nullspace(m).dim());
  state.counters["cols"] = m.cols();
}
BENCHMARK(BM_Nullspace)
    ->Args({8, 5})   // rank-deficient: 8x8 through -2
    ->Args({10, 7})  // 10x10 through 2
    ->Unit(benchmark::kMillisecond);

void BM_TableRow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(rk::search_table(n, 0, 1).back());
}
BENCHMARK(BM_TableRow)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace
