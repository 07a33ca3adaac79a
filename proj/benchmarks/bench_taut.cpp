#include <benchmark/benchmark.h>

#include <fjrw/correlator.hpp>
#include <fjrw/tables.hpp>

using namespace fjrw;

static void ChernProductIntegral(benchmark::State& state) {
  WeightSystem ws = weight_system(parse_polynomial("x^4+y^12"));
  CorrelatorSpec spec = narrow_spec(ws, PolyType::fermat, {ws.d - 1, ws.d - 2, 2, 2, 2});
  TautClass a = chern_character(spec, 1, 1);
  TautClass b = chern_character(spec, 2, 1);
  for (auto _ : state) {
    Rational v = integrate_m05(multiply(a, b));
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(ChernProductIntegral);

static void BuildChernCharacter(benchmark::State& state) {
  WeightSystem ws = weight_system(parse_polynomial("x^4+y^12"));
  CorrelatorSpec spec = narrow_spec(ws, PolyType::fermat, {ws.d - 1, ws.d - 2, 2, 2, 2});
  for (auto _ : state) {
    TautClass a = chern_character(spec, 1, 1);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BuildChernCharacter);

static void BuildMonomialTable(benchmark::State& state) {
  WeightSystem ws = weight_system(from_weights(PolyType::fermat, 3, 1, 5));
  for (auto _ : state) {
    MonomialTable t = monomial_table(ws);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BuildMonomialTable);
