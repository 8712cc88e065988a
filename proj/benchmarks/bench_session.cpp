#include <benchmark/benchmark.h>

#include "negset/session/evaluator.hpp"
#include "negset/session/parser.hpp"
#include "negset/session/report.hpp"

using namespace negset::session;

namespace {

const char* kTrip = R"(universe a b c d e f g h i k l
agent A = [{a d} {a d f g h}]
agent B = [{a b d} {a b d f i l}]
agent C = [{a h} {a d h k}]
let S1 = (A odot B) odot C
let S2 = (A oplus B) oplus C
expect S1 = [{a} {a b d f g h i k l}]
)";

void BM_ParseTrip(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse_session(kTrip));
}
BENCHMARK(BM_ParseTrip);

void BM_RunTrip(benchmark::State& state) {
  auto script = parse_session(kTrip);
  for (auto _ : state) benchmark::DoNotOptimize(run_session(script));
}
BENCHMARK(BM_RunTrip);

void BM_RenderTripJson(benchmark::State& state) {
  auto report = run_session(parse_session(kTrip));
  for (auto _ : state) benchmark::DoNotOptimize(render_json(report));
}
BENCHMARK(BM_RenderTripJson);

}  // namespace
