#include <benchmark/benchmark.h>

#include "clusteralg/expansion.hpp"

using namespace clusteralg;

namespace {

MutationWord alternating(int len) {
  std::vector<int> dirs;
  for (int i = 0; i < len; ++i) dirs.push_back(i % 2 == 0 ? 1 : 2);
  return MutationWord(std::move(dirs));
}

void BM_PolyMul(benchmark::State& state) {
  ExtendedExchangeMatrix b(2, 0, {{0, 3}, {-3, 0}});
  Seed s = oracle_walk(b, alternating(static_cast<int>(state.range(0))));
  const LaurentPoly& big = s.cluster()[0];
  for (auto _ : state) {
    benchmark::DoNotOptimize(big * big);
  }
}
BENCHMARK(BM_PolyMul)->Arg(3)->Arg(4)->Arg(5);

void BM_OracleWalk(benchmark::State& state) {
  ExtendedExchangeMatrix b(3, 0, {{0, 2, -1}, {-2, 0, 1}, {1, -1, 0}});
  MutationWord w = alternating(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_expand(b, w));
  }
}
BENCHMARK(BM_OracleWalk)->Arg(4)->Arg(6);

void BM_CompatibleEnumeration(benchmark::State& state) {
  for (auto _ : state) {
    long count = 0;
    enumerate_compatible_pairs(static_cast<int>(state.range(0)), 4, 3,
                               [&](uint64_t, uint64_t) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CompatibleEnumeration)->Arg(6)->Arg(8)->Arg(10);

void BM_ExpandCompat(benchmark::State& state) {
  ExtendedExchangeMatrix b(3, 0, {{0, 3, -1}, {-3, 0, 2}, {1, -2, 0}});
  MutationWord w = alternating(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    ExpansionContext ctx = ExpansionContext::build(b, w, 1, 0);
    benchmark::DoNotOptimize(expand_compat(ctx));
  }
}
BENCHMARK(BM_ExpandCompat)->Arg(3)->Arg(4)->Arg(5);

void BM_ExpandTau(benchmark::State& state) {
  ExtendedExchangeMatrix b(3, 0, {{0, 3, -1}, {-3, 0, 2}, {1, -2, 0}});
  MutationWord w = alternating(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    ExpansionContext ctx = ExpansionContext::build(b, w, 1, 0);
    benchmark::DoNotOptimize(expand_tau(ctx));
  }
}
BENCHMARK(BM_ExpandTau)->Arg(3)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
