#include <benchmark/benchmark.h>

#include "logdamp/propagator.hpp"
#include "logdamp/quadrature.hpp"
#include "logdamp/symbols.hpp"

using namespace logdamp;

static void BM_mode_solution(benchmark::State& state) {
    const DampingParams params(1.0);
    double r = 0.0;
    for (auto _ : state) {
        r += 1e-3;
        if (r > 10.0) r = 1e-3;
        benchmark::DoNotOptimize(mode_solution(r, params, 100.0, 1.0));
    }
}
BENCHMARK(BM_mode_solution);

static void BM_thresholds(benchmark::State& state) {
    const DampingParams params(1.0);
    for (auto _ : state) benchmark::DoNotOptimize(thresholds(params));
}
BENCHMARK(BM_thresholds);

static void BM_oscillatory_norm2(benchmark::State& state) {
    const DampingParams params(1.0);
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            oscillatory_norm2(OscKind::sin2_over_r2, 3, params, t, 1e-10));
}
BENCHMARK(BM_oscillatory_norm2)->Arg(1000)->Arg(100000);

static void BM_spectral_l2(benchmark::State& state) {
    const DampingParams params(1.0);
    const double t = static_cast<double>(state.range(0));
    const auto amp = [&](double r) {
        return std::abs(mode_solution(r, params, t, std::exp(-r * r / 2)).u);
    };
    for (auto _ : state)
        benchmark::DoNotOptimize(spectral_l2(amp, 3, t, 1e-9));
}
BENCHMARK(BM_spectral_l2)->Arg(100)->Arg(10000);

BENCHMARK_MAIN();
