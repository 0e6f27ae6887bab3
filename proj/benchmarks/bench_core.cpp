#include <benchmark/benchmark.h>

#include <random>

#include "frobsplit/density.hpp"
#include "frobsplit/goursat.hpp"
#include "frobsplit/intpoly.hpp"
#include "frobsplit/torus.hpp"
#include "frobsplit/weil.hpp"

using namespace frobsplit;

namespace {

void BM_FieldMul(benchmark::State& state) {
  const ExtField& f = make_field(3, static_cast<int>(state.range(0)));
  std::uint64_t x = f.primitive_element(), acc = 1;
  for (auto _ : state) {
    acc = f.mul(acc, x);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(6)->Arg(12)->Arg(20);

void BM_FactorMod(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int deg = static_cast<int>(state.range(0));
  std::vector<std::uint64_t> c(deg + 1);
  for (auto& v : c) v = rng() % 101;
  c[deg] = 1;
  const ModPoly f(make_field(101, 1), c);
  for (auto _ : state) benchmark::DoNotOptimize(factor_mod(f));
}
BENCHMARK(BM_FactorMod)->Arg(8)->Arg(16)->Arg(32);

void BM_FactorOverZ(benchmark::State& state) {
  // Product of two Weil-type quartics.
  const IntPoly f = IntPoly{25, -5, 3, -1, 1} * IntPoly{49, 14, 5, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(factor_over_Z(f));
}
BENCHMARK(BM_FactorOverZ);

void BM_WeilAnalyze(benchmark::State& state) {
  const WeilPoly w = make_weil(IntPoly{3, -1, 1}.pow(3), 3);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(w, {5, 7, 11, 13}));
}
BENCHMARK(BM_WeilAnalyze);

void BM_ClassifyGroup(benchmark::State& state) {
  const auto d = make_descriptor(Family::kC, 1, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify_group(d, 1));
}
BENCHMARK(BM_ClassifyGroup)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_TorusCensus(benchmark::State& state) {
  const auto d = make_descriptor(Family::kC, 1, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(torus_census(d, 2));
}
BENCHMARK(BM_TorusCensus)->Arg(5)->Arg(11)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
  const auto model = make_model(Family::kC, 1, {3, 5}, Squeeze::kFull);
  const auto streams = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chebotarev_simulate(model, 1'000'000, 1, streams));
}
BENCHMARK(BM_Simulate)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_GoursatClosure(benchmark::State& state) {
  const std::vector<GroupDescriptor> f = {make_descriptor(Family::kC, 1, 5, Level::kDerived),
                                          make_descriptor(Family::kC, 1, 7, Level::kDerived)};
  const auto gens = random_surjective_generators(f, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(goursat_verify(f, gens));
}
BENCHMARK(BM_GoursatClosure)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
