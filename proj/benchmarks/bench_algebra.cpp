#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "negset/algebra.hpp"
#include "negset/consistency.hpp"

using namespace negset;

namespace {

std::vector<NegotiationSet> random_family(std::size_t n, std::size_t count) {
  auto u = letter_universe(n);
  std::mt19937_64 rng(7);
  std::vector<NegotiationSet> out;
  for (std::size_t i = 0; i < count; ++i) {
    FiniteSet adm(u), nec(u);
    for (std::size_t x = 0; x < n; ++x) {
      auto v = rng() % 3;
      if (v >= 1) adm = adm.with(x);
      if (v == 2) nec = nec.with(x);
    }
    out.emplace_back(nec, adm);
  }
  return out;
}

void BM_Odot(benchmark::State& state) {
  auto family = random_family(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(odot(family[0], family[1]));
}
BENCHMARK(BM_Odot)->Arg(8)->Arg(64)->Arg(256)->Arg(4096);

void BM_Oplus(benchmark::State& state) {
  auto family = random_family(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(oplus(family[0], family[1]));
}
BENCHMARK(BM_Oplus)->Arg(8)->Arg(64)->Arg(256)->Arg(4096);

void BM_OplusFamily(benchmark::State& state) {
  auto family = random_family(64, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oplus_all(family));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OplusFamily)->Range(2, 512);

void BM_DiscViolations(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  auto u = letter_universe(n);
  std::vector<std::pair<std::size_t, std::size_t>> strong, weak;
  for (std::size_t x = 0; x + 1 < n; x += 2) strong.emplace_back(x, x + 1);
  for (std::size_t x = 1; x + 1 < n; x += 2) weak.emplace_back(x, x + 1);
  ContradictionSpec spec(u, strong, weak);
  auto s = special(u, SpecialKind::half_empty);
  for (auto _ : state) benchmark::DoNotOptimize(disc_violations(s, spec));
}
BENCHMARK(BM_DiscViolations)->Arg(8)->Arg(64)->Arg(256);

}  // namespace
