#include <benchmark/benchmark.h>

#include "wdp/blowdown.hpp"
#include "wdp/count.hpp"
#include "wdp/synth4.hpp"
#include "wdp/zeta.hpp"

using namespace wdp;

namespace {

quad::Pair pair_of(int type_no, int p) {
  return synth4::synthesize(types::type_table(4).by_number(type_no), gf::field(p, 1), 1).pair;
}

void BM_CountCharsum(benchmark::State& st) {
  auto P = pair_of(33, 11);
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(count::count_charsum(P, n));
}
BENCHMARK(BM_CountCharsum)->DenseRange(1, 4);

void BM_CountBrute(benchmark::State& st) {
  auto P = pair_of(33, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(count::count_brute(P, 1));
}
BENCHMARK(BM_CountBrute)->Arg(3)->Arg(5)->Arg(7);

void BM_Synthesize(benchmark::State& st) {
  const auto& at = types::type_table(4).by_number(static_cast<int>(st.range(0)));
  const auto& K = gf::field(7, 1);
  std::uint64_t seed = 1;
  for (auto _ : st) benchmark::DoNotOptimize(synth4::synthesize(at, K, seed++));
}
BENCHMARK(BM_Synthesize)->Arg(8)->Arg(33)->Arg(58);

void BM_Verify(benchmark::State& st) {
  const auto& at = types::type_table(4).by_number(33);
  auto P = pair_of(33, 7);
  for (auto _ : st) benchmark::DoNotOptimize(count::verify(P, at, 4));
}
BENCHMARK(BM_Verify);

void BM_ZetaDenominator(benchmark::State& st) {
  const auto& at = types::type_table(3).by_number(77);
  for (auto _ : st) benchmark::DoNotOptimize(zeta::zeta_denominator(at, 101));
}
BENCHMARK(BM_ZetaDenominator);

void BM_Realize(benchmark::State& st) {
  types::type_table(3);
  const int t = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(blowdown::realizability(t, 5, 1, 1));
}
BENCHMARK(BM_Realize)->Arg(19)->Arg(70);

}  // namespace

BENCHMARK_MAIN();
