#include <benchmark/benchmark.h>

#include <random>

#include "fraclab/field.hpp"

using namespace fraclab;

namespace {

std::vector<double> random_samples(int n) {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> u(n);
    for (double& v : u) v = dist(rng);
    return u;
}

}  // namespace

static void BM_analyze(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid grid(n, 10.0);
    const auto samples = random_samples(n);
    cvec hat(n);
    for (auto _ : state) {
        spectral::to_spectrum(grid, samples, hat);
        benchmark::DoNotOptimize(hat.data());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_analyze)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

static void BM_half_roundtrip(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid grid(n, 10.0);
    std::vector<double> u = random_samples(n);
    cvec half(n / 2 + 1);
    for (auto _ : state) {
        spectral::to_spectrum_half(grid, u, half);
        spectral::to_physical_half(grid, half, u);
        benchmark::DoNotOptimize(u.data());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_half_roundtrip)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

static void BM_apply_symbol(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Grid grid(n, 10.0);
    const SpectralField f = SpectralField::from_samples(grid, random_samples(n));
    const FourierSymbol s = symbol_fkdv_dispersion(0.5);
    for (auto _ : state) {
        SpectralField out = apply_symbol(f, s);
        benchmark::DoNotOptimize(out.physical().data());
    }
}
BENCHMARK(BM_apply_symbol)->Arg(1 << 12)->Arg(1 << 14);
