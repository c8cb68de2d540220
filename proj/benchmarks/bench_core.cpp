#include <benchmark/benchmark.h>

#include "cunningham/arith.hpp"
#include "cunningham/classify.hpp"
#include "cunningham/enumerate.hpp"
#include "cunningham/iso.hpp"
#include "cunningham/oracle.hpp"

using namespace cunningham;

namespace {

GroupSpec spec_of(const std::vector<std::uint64_t>& primes, const std::vector<unsigned>& I) {
  const Chain c = validate_chain(primes);
  return build_group(c, make_shape(c, I));
}

const std::vector<std::vector<std::uint64_t>> kChains = {{7, 3}, {11, 5}, {23, 11, 5}, {47, 23, 11, 5}};

void BM_CyclicClassCountFormula(benchmark::State& state) {
  const auto l = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cyclic_class_count(l, 5, 15));
}
BENCHMARK(BM_CyclicClassCountFormula)->DenseRange(2, 8, 2);

void BM_CyclicEnumeration(benchmark::State& state) {
  const auto spec = spec_of(kChains[state.range(0)], {});
  for (auto _ : state) {
    std::size_t n = 0;
    for_each_cyclic_transitive(spec, [&](const CyclicMember&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_CyclicEnumeration)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ClassifyCyclicStructured(benchmark::State& state) {
  const auto spec = spec_of(kChains[state.range(0)], {});
  ClassifyOptions opt;
  opt.iso_cap = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify_cyclic(spec, opt).classes.size());
}
BENCHMARK(BM_ClassifyCyclicStructured)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ClassifyMetacyclicPair(benchmark::State& state) {
  const auto spec = spec_of(kChains[state.range(0)], {2});
  ClassifyOptions opt;
  opt.iso_cap = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify_metacyclic(spec, opt).classes.size());
}
BENCHMARK(BM_ClassifyMetacyclicPair)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_OracleTransitiveSubgroups(benchmark::State& state) {
  const auto spec = spec_of({7, 3}, state.range(0) ? std::vector<unsigned>{2} : std::vector<unsigned>{});
  for (auto _ : state) benchmark::DoNotOptimize(oracle_transitive_subgroups(spec, 50000).transitive.size());
}
BENCHMARK(BM_OracleTransitiveSubgroups)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_BacktrackAutFixingStab(benchmark::State& state) {
  const auto spec = spec_of({11, 5}, {2});
  const auto fams = metacyclic_factor_transitive_subgroups(spec);
  const FiniteGroup g = FiniteGroup::from_subgroup(Subgroup(spec, fams.front().members.front().gens), 10000);
  for (auto _ : state) benchmark::DoNotOptimize(count_aut_fixing_stab(g, 10000));
}
BENCHMARK(BM_BacktrackAutFixingStab)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
