#include <benchmark/benchmark.h>

#include <cmath>

#include "fraclab/integrator.hpp"
#include "fraclab/solitons.hpp"

using namespace fraclab;

static void BM_irk4_step_fkdv(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid grid(n, 100.0);
    const SpectralField u0 = bo_soliton(2.0, grid);
    GaussStepper stepper(ModelSpec::fkdv(1.0), grid, 1e-4);
    cvec uhat = u0.spectrum();
    for (auto _ : state) {
        benchmark::DoNotOptimize(stepper.step(uhat));
    }
    state.counters["iters"] = stepper.last_iterations();
}
BENCHMARK(BM_irk4_step_fkdv)->RangeMultiplier(4)->Range(1 << 12, 1 << 16)->Unit(benchmark::kMicrosecond);

static void BM_irk4_step_fbbm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid grid(n, 20.0);
    const SpectralField u0 = SpectralField::from_function(grid, [](double x) {
        const double c = 1.0 / std::cosh(x);
        return 10.0 * c * c;
    });
    GaussStepper stepper(ModelSpec::fbbm(0.5), grid, 5e-4);
    cvec uhat = u0.spectrum();
    for (auto _ : state) {
        benchmark::DoNotOptimize(stepper.step(uhat));
    }
}
BENCHMARK(BM_irk4_step_fbbm)->Arg(1 << 13)->Arg(1 << 15)->Unit(benchmark::kMicrosecond);

static void BM_soliton_residual(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid grid(n, 100.0);
    const SpectralField q = bo_soliton(1.0, grid);
    const FourierSymbol p = symbol_fractional(1.0);
    for (auto _ : state) {
        SpectralField f = soliton_residual(q, p, 1.0);
        benchmark::DoNotOptimize(f.spectrum().data());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_soliton_residual)->Arg(1 << 14)->Arg(1 << 16)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
