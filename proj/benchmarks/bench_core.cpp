#include <benchmark/benchmark.h>

#include "pburgers/burgers_op.hpp"
#include "pburgers/cole_hopf.hpp"
#include "pburgers/forcing.hpp"
#include "pburgers/imex.hpp"
#include "pburgers/random.hpp"
#include "pburgers/solver.hpp"
#include "pburgers/torus_spectral.hpp"

using namespace pburgers;

namespace {

// Range arg is K; M = 2K as at desk scale.
GridSpec grid_of(const benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  return GridSpec::make(K, 2 * K);
}

void BM_SynthesizeAnalyze(benchmark::State& state) {
  const GridSpec g = grid_of(state);
  const Field u = random_field(g, 1, 2.0);
  for (auto _ : state) {
    const Samples s = synthesize(u);
    benchmark::DoNotOptimize(analyze(s.values, g, Basis::kSine));
  }
}
BENCHMARK(BM_SynthesizeAnalyze)->RangeMultiplier(2)->Range(8, 64);

void BM_SquareDealiased(benchmark::State& state) {
  const Field u = random_field(grid_of(state), 2, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(square_dealiased(u));
}
BENCHMARK(BM_SquareDealiased)->RangeMultiplier(2)->Range(8, 64);

void BM_JacobianApply(benchmark::State& state) {
  const GridSpec g = grid_of(state);
  const Field u = random_field(g, 3, 2.0), w = random_field(g, 4, 2.0);
  const Linearization lin(u, {0.5, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(lin.apply(w));
}
BENCHMARK(BM_JacobianApply)->RangeMultiplier(2)->Range(8, 64);

void BM_Continuation(benchmark::State& state) {
  const GridSpec g = grid_of(state);
  const DualField f = build_forcing(benchmark_forcing("rough"), g);
  for (auto _ : state) benchmark::DoNotOptimize(continuation_solve(f, 0.25, SolveConfig{}));
}
BENCHMARK(BM_Continuation)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_OraclePeriod(benchmark::State& state) {
  const GridSpec g = grid_of(state);
  const DualField f = build_forcing(benchmark_forcing("oscillatory"), g);
  OracleOptions o;
  o.drift_tol = 0.0;
  for (auto _ : state) benchmark::DoNotOptimize(imex_oracle(f, 1.0, Field::zeros(g), 1, 2048, o));
}
BENCHMARK(BM_OraclePeriod)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_GroundState(benchmark::State& state) {
  const GridSpec g = grid_of(state);
  const Field v = random_field(g, 5, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(ground_state(v, 0.5, 1e-12));
}
BENCHMARK(BM_GroundState)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
