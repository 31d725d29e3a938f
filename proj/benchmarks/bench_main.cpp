#include <benchmark/benchmark.h>

#include "npd/characters.hpp"
#include "npd/class_products.hpp"
#include "npd/derangements.hpp"
#include "npd/linear_strata.hpp"
#include "npd/symbols.hpp"

namespace {

void BM_SnCharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    npd::CharacterTable t = npd::sn_character_table(n);
    benchmark::DoNotOptimize(t.values.size());
  }
}
BENCHMARK(BM_SnCharacterTable)->Arg(8)->Arg(9)->Arg(10);

void BM_StratumCensus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int q = static_cast<int>(state.range(1));
  for (auto _ : state) {
    npd::StratumCensus c = npd::stratum_census(n, q);
    benchmark::DoNotOptimize(c.counts.size());
  }
}
BENCHMARK(BM_StratumCensus)->Args({3, 3})->Args({4, 2});

void BM_EnumerateSymbols(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  auto any_defect = [](int) { return true; };
  for (auto _ : state) {
    auto symbols = npd::enumerate_symbols(r, any_defect);
    benchmark::DoNotOptimize(symbols.size());
  }
}
BENCHMARK(BM_EnumerateSymbols)->Arg(8)->Arg(12);

void BM_DerangementConvolution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<npd::ConjugacyClassSn> classes =
      npd::conjugacy_classes(n, npd::Group::An);
  std::set<int> member;
  for (int i = 0; i < static_cast<int>(classes.size()); ++i)
    if (npd::num_fixed_points(classes[i].rep) == 0) member.insert(i);
  npd::NormalSubset d = npd::make_normal_subset(n, npd::Group::An, member);
  for (auto _ : state) {
    npd::DistributionDistance dist = npd::product_distribution_distance(d, d);
    benchmark::DoNotOptimize(dist.l1);
  }
}
BENCHMARK(BM_DerangementConvolution)->Arg(7)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
