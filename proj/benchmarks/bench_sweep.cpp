#include <benchmark/benchmark.h>

#include <fjrw/sweep.hpp>

using namespace fjrw;

static void VerdictSweep(benchmark::State& state) {
  for (auto _ : state) {
    auto rows = sweep(PolyType::fermat, state.range(0));
    benchmark::DoNotOptimize(rows);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(VerdictSweep)->Arg(50)->Arg(100)->Arg(200)->Complexity();

static void SingleVerdict(benchmark::State& state) {
  InvertiblePolynomial p = parse_polynomial("x^4+y^10");
  for (auto _ : state) {
    SemisimplicityReport r = semisimplicity_verdict(p);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(SingleVerdict);
