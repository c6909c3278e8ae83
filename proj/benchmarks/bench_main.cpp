// Micro-benchmarks for the hot paths: bicomplex products, polynomial
// multiplication, the closed-form vs quadrature Theodorescu transform,
// circle integrals, and the fixed-point Vekua solver.  Not part of ctest;
// run build/benchmarks/bivek_bench directly.

#include "bivek/hardy.hpp"
#include "bivek/rng.hpp"
#include "bivek/theodorescu.hpp"
#include "bivek/vekua.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace bivek;

void BM_BicomplexMul(benchmark::State& state) {
    auto gen = rng::make_stream(42, "bench.mul");
    const Bicomplex w = rng::bicomplex_in(gen), v = rng::bicomplex_in(gen);
    for (auto _ : state) benchmark::DoNotOptimize(mul(w, v));
}
BENCHMARK(BM_BicomplexMul);

void BM_BiPolyMul(benchmark::State& state) {
    const int deg = static_cast<int>(state.range(0));
    auto gen = rng::make_stream(42, "bench.polymul");
    const BiPoly f = rng::bipoly_in(gen, deg, deg);
    const BiPoly g = rng::bipoly_in(gen, deg, deg);
    for (auto _ : state) benchmark::DoNotOptimize(mul(f, g));
}
BENCHMARK(BM_BiPolyMul)->Arg(4)->Arg(8)->Arg(16);

void BM_TheodorescuClosed(benchmark::State& state) {
    const ComplexPoly mono = ComplexPoly::term(4, 4, {1.0, 0.0});
    const Complex z0(0.3, 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(t_complex(mono, z0));
}
BENCHMARK(BM_TheodorescuClosed);

void BM_TheodorescuQuad(benchmark::State& state) {
    const ComplexPoly mono = ComplexPoly::term(4, 4, {1.0, 0.0});
    const Complex z0(0.3, 0.2);
    const QuadratureGrid grid{static_cast<int>(state.range(0)),
                              2 * static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(t_complex_quad(mono, z0, grid));
}
BENCHMARK(BM_TheodorescuQuad)->Arg(32)->Arg(64)->Arg(128)->Arg(256)
    ->Unit(benchmark::kMillisecond);

void BM_CircleLp(benchmark::State& state) {
    auto gen = rng::make_stream(42, "bench.circle");
    const BiPoly f = rng::bipoly_in(gen, 4, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(circle_lp(Func{f}, 0.9, 2.0,
                                           static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CircleLp)->Arg(256)->Arg(1024)->Arg(4096);

void BM_FixedPointSolve(benchmark::State& state) {
    auto gen = rng::make_stream(42, "bench.fixed");
    VekuaProblem problem;
    problem.A = BiPoly::constant(rng::bicomplex_in(gen, 0.05));
    problem.B = BiPoly::constant(rng::bicomplex_in(gen, 0.05));
    const BiPoly phi = rng::holomorphic_in(gen, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_fixed_point(problem, phi, 50));
    state.SetLabel("cap 24");
}
BENCHMARK(BM_FixedPointSolve)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
