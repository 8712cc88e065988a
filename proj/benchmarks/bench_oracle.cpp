#include <benchmark/benchmark.h>

#include "negset/oracle/enumerate.hpp"
#include "negset/oracle/laws.hpp"
#include "negset/universe.hpp"

using namespace negset;

static void BM_Enumerate(benchmark::State& state) {
  auto u = letter_universe(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::enumerate_negsets(u));
}
BENCHMARK(BM_Enumerate)->DenseRange(2, 8, 2);

static void BM_CommutativitySweep(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::check_law(oracle::LawId::commutativity_oplus,
                                               static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_CommutativitySweep)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_AssociativitySweep(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::check_law(oracle::LawId::associativity_odot,
                                               static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_AssociativitySweep)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_DiscClosureSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle::check_law(oracle::LawId::disc_closure_oplus, 3));
}
BENCHMARK(BM_DiscClosureSweep)->Unit(benchmark::kMillisecond);
