#include <benchmark/benchmark.h>

#include <fjrw/frobenius.hpp>
#include <fjrw/sweep.hpp>

using namespace fjrw;

static void FivePointPipeline(benchmark::State& state) {
  WeightSystem ws = weight_system(from_weights(PolyType::fermat, 1, 4, state.range(0)));
  CorrelatorSpec spec = narrow_spec(ws, PolyType::fermat, {ws.d - 1, ws.d - 2, 2, 2, 2});
  for (auto _ : state) {
    Rational v = evaluate_concave(spec);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(FivePointPipeline)->Arg(5)->Arg(25)->Arg(125)->Arg(625);

static void FivePointSweep(benchmark::State& state) {
  auto keys = enumerate_weight_systems(PolyType::fermat, state.range(0));
  for (auto _ : state) {
    Rational acc = 0;
    for (const SweepKey& key : keys) {
      WeightSystem ws = weight_system(from_weights(key.type, key.delta, key.w1, key.w2));
      if (ws.chat < 1) continue;
      acc += evaluate_concave(narrow_spec(ws, PolyType::fermat, {ws.d - 1, ws.d - 2, 2, 2, 2}));
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(FivePointSweep)->Arg(30)->Arg(60);

static void FourPointPipeline(benchmark::State& state) {
  WeightSystem ws = weight_system(parse_polynomial("x^4+y^10"));
  CorrelatorSpec spec = narrow_spec(ws, PolyType::fermat, {11, 2, 7, 2});
  for (auto _ : state) {
    Rational v = evaluate_concave(spec);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(FourPointPipeline);
