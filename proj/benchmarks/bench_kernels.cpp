#include <benchmark/benchmark.h>

#include "logzeta/integrals.hpp"
#include "logzeta/special.hpp"
#include "logzeta/verify.hpp"

using namespace logzeta;
using namespace logzeta::mp;

namespace {

PrecisionContext context(const benchmark::State& state) {
  return PrecisionContext(static_cast<unsigned>(state.range(0)));
}

void BM_Zeta(benchmark::State& state) {
  const auto ctx = context(state);
  const Complex s(Real(0.5, 64), Real(6L, 64));
  for (auto _ : state) benchmark::DoNotOptimize(special::zeta(s, ctx));
}
BENCHMARK(BM_Zeta)->Arg(128)->Arg(256)->Arg(512);

void BM_Gamma(benchmark::State& state) {
  const auto ctx = context(state);
  const Complex z(Real(0.3, 64), Real(2L, 64));
  for (auto _ : state) benchmark::DoNotOptimize(special::gamma(z, ctx));
}
BENCHMARK(BM_Gamma)->Arg(128)->Arg(256)->Arg(512);

void BM_EulerGamma(benchmark::State& state) {
  const auto ctx = context(state);
  for (auto _ : state) benchmark::DoNotOptimize(special::euler_gamma(ctx));
}
BENCHMARK(BM_EulerGamma)->Arg(256)->Arg(1024);

void BM_SeriesMonomial(benchmark::State& state) {
  const PrecisionContext ctx;
  const exact::MonomialSpec spec{static_cast<unsigned>(state.range(0)), 0, 5};
  const Real tol(1e-30, 64);
  for (auto _ : state) benchmark::DoNotOptimize(integrals::series_eval(spec, ctx, tol));
}
BENCHMARK(BM_SeriesMonomial)->Arg(1)->Arg(12);

void BM_SeriesConjecture(benchmark::State& state) {
  const PrecisionContext ctx;
  const Complex z(Real(-1.5, 64));
  const Real tol(1e-30, 64);
  for (auto _ : state) benchmark::DoNotOptimize(integrals::series_eval_conjecture(z, ctx, tol));
}
BENCHMARK(BM_SeriesConjecture);

void BM_Reduce1d(benchmark::State& state) {
  const PrecisionContext ctx;
  const Complex z(Real(-1.5, 64));
  const Real tol(1e-20, 64);
  for (auto _ : state) benchmark::DoNotOptimize(integrals::reduce_1d_eval(z, ctx, tol));
}
BENCHMARK(BM_Reduce1d)->Unit(benchmark::kMillisecond);

void BM_Quad2d(benchmark::State& state) {
  const PrecisionContext ctx(64);
  const integrals::IntegralSpec spec = exact::MonomialSpec{0, 0, 0};
  const Real tol(1e-9, 64);
  for (auto _ : state) benchmark::DoNotOptimize(integrals::quad_2d_eval(spec, ctx, tol));
}
BENCHMARK(BM_Quad2d)->Unit(benchmark::kMillisecond);

void BM_ConjectureGrid(benchmark::State& state) {
  const PrecisionContext ctx;
  verify::Options options;
  options.tol = Real(1e-18, 64);
  const auto grid = verify::default_grid(256);
  for (auto _ : state) benchmark::DoNotOptimize(verify::verify_conjecture(grid, ctx, options));
}
BENCHMARK(BM_ConjectureGrid)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
