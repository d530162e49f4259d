#include <permorb/permorb.hpp>

#include <benchmark/benchmark.h>

using namespace permorb;

namespace {

Lattice A1() { return Lattice(IntMatrix{{2}}, "A1"); }
Lattice A2() { return Lattice(IntMatrix{{2, 1}, {1, 2}}, "A2"); }

void BM_CyclotomicMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Cyc a = Cyc(rat(1, 3)) - Cyc::root(n, 1), b = Cyc(2) + Cyc::root(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMul)->Arg(6)->Arg(12)->Arg(24);

void BM_CyclotomicInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Cyc a = Cyc(3) - Cyc::root(n, 1) + Cyc::root(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CyclotomicInverse)->Arg(6)->Arg(12)->Arg(24);

void BM_LemmaRootSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lemma_root_sum(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LemmaRootSum)->Arg(12)->Arg(24);

// c_coeffs caches its results, so this measures the cache hit after the first call.
void BM_CCoeffs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(c_coeffs(static_cast<int>(state.range(0)), 1, 6));
}
BENCHMARK(BM_CCoeffs)->Arg(3)->Arg(6);

void BM_CharTwisted(benchmark::State& state) {
  const Lattice K = state.range(0) == 1 ? A1() : A2();
  for (auto _ : state) benchmark::DoNotOptimize(char_twisted(K, 3, 10));
}
BENCHMARK(BM_CharTwisted)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_CompareCharacters(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(compare_characters(A2(), 2, 10));
}
BENCHMARK(BM_CompareCharacters)->Unit(benchmark::kMillisecond);

void BM_SpacetimeMode(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  OrbifoldSpaces s(A1(), k);
  const auto u = embed_slot(s.VL, s.VK.ground(LatVec{1}), 0);
  const auto v = s.VT.apply_mode({0, -1}, s.VT.ground(LatVec{-1}));
  for (auto _ : state) benchmark::DoNotOptimize(spacetime_twisted_mode(s, u, rat(-1, k), v));
}
BENCHMARK(BM_SpacetimeMode)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_WorldsheetMode(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  OrbifoldSpaces s(A1(), k);
  const auto u = s.VL.conformal_vector();
  const auto v = s.VK.apply_mode({0, -1}, s.VK.ground(LatVec{-1}));
  for (auto _ : state) benchmark::DoNotOptimize(worldsheet_twisted_mode(s, u, 1, v));
}
BENCHMARK(BM_WorldsheetMode)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
