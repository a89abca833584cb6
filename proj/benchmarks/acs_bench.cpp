#include <benchmark/benchmark.h>

#include <random>

#include "acs/cohomology.hpp"
#include "acs/cs_engine.hpp"
#include "acs/group.hpp"
#include "acs/number_theory.hpp"

namespace {

void BM_Kronecker(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<std::pair<std::int64_t, std::int64_t>> args(1024);
  for (auto& [a, m] : args) {
    a = static_cast<std::int64_t>(rng() >> 2);
    m = static_cast<std::int64_t>(rng() >> 2) | 1;
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, m] = args[i++ & 1023];
    benchmark::DoNotOptimize(acs::kronecker(a, m));
  }
}
BENCHMARK(BM_Kronecker);

void BM_Factorize60Bit(benchmark::State& state) {
  std::mt19937_64 rng(2);
  for (auto _ : state) {
    const std::uint64_t v = (rng() >> 4) | 1ULL << 59;
    benchmark::DoNotOptimize(acs::factorize(v));
  }
}
BENCHMARK(BM_Factorize60Bit);

void BM_Scan(benchmark::State& state) {
  const acs::Preset p = acs::parse_preset("klein-q8-145");
  for (auto _ : state) benchmark::DoNotOptimize(acs::density_scan(p, 1, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Scan)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_ConsistencyCheck(benchmark::State& state) {
  const acs::Preset p = acs::parse_preset("klein-q8-105");
  for (auto _ : state) benchmark::DoNotOptimize(acs::consistency_check(p, 2, 5000));
}
BENCHMARK(BM_ConsistencyCheck)->Unit(benchmark::kMillisecond);

void BM_GeneratorOrder(benchmark::State& state) {
  const auto n = static_cast<acs::Residue>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(acs::class_order(acs::cyclic_generator(n)));
}
BENCHMARK(BM_GeneratorOrder)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

// The Z/2 system behind the twist check grows with |G|^2 unknowns.
void BM_TwistVerify(benchmark::State& state) {
  const acs::SplitGroup g = state.range(0) == 0 ? acs::heisenberg(3, 3) : acs::gl2(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(acs::twist_verify(g.section, g.projection));
  state.SetLabel(g.group->name());
}
BENCHMARK(BM_TwistVerify)->Arg(0)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
