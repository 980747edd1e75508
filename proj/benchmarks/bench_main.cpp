#include <benchmark/benchmark.h>

#include <memory>

#include "qr/corez.hpp"
#include "qr/filtration.hpp"
#include "qr/idempotents.hpp"
#include "qr/poly_system.hpp"
#include "qr/quandle.hpp"

using namespace qr;

static void BM_DeltaPowersDihedral(benchmark::State& state) {
  const Quandle q = dihedral_quandle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(delta_powers(q, 9));
}
BENCHMARK(BM_DeltaPowersDihedral)->Arg(3)->Arg(5)->Arg(9)->Arg(15);

static void BM_DeltaPowersCommutative(benchmark::State& state) {
  const Quandle q = commutative_quandle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(delta_powers(q, 13));
}
BENCHMARK(BM_DeltaPowersCommutative)->Arg(5)->Arg(7)->Arg(11);

static void BM_EnumerateIdempotents(benchmark::State& state) {
  const auto q = std::make_shared<const Quandle>(x6_quandle());
  const long bound = state.range(0);
  const auto jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_idempotents(q, bound, SizeCaps::defaults(), jobs));
}
BENCHMARK(BM_EnumerateIdempotents)->Args({2, 1})->Args({3, 1})->Args({3, 2})->Unit(benchmark::kMillisecond);

static void BM_SearchSystem(benchmark::State& state) {
  const PolySystem s = build_system(commutative_quandle(5), 1);
  for (auto _ : state) benchmark::DoNotOptimize(search_system(s, state.range(0)));
}
BENCHMARK(BM_SearchSystem)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_EnumerateQuandles(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_quandles(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateQuandles)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CorezExtremalSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(corez::extremal_sweep(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CorezExtremalSweep)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
