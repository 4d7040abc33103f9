#include <benchmark/benchmark.h>

#include "nmqt/amplitude.hpp"
#include "nmqt/memory_kernel.hpp"
#include "nmqt/spectral.hpp"
#include "nmqt/volterra.hpp"

using namespace nmqt;

static void BM_AmplitudeLorentzian(benchmark::State& state) {
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-6;
        benchmark::DoNotOptimize(amplitude_lorentzian(t, 10.0, 1.0, 0.5));
    }
}
BENCHMARK(BM_AmplitudeLorentzian);

static void BM_SurvivalRepeated(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(survival_repeated(0.02, n, 10.0, 1.0, 0.0));
}
BENCHMARK(BM_SurvivalRepeated)->Arg(10)->Arg(1000)->Arg(100000);

static void BM_EffectiveRateScaled(benchmark::State& state) {
    const ScalingParams sc = make_scaling(0.2, 0.3, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(effective_rate_scaled(sc));
}
BENCHMARK(BM_EffectiveRateScaled);

static void BM_MemoryKernelLorentzian(benchmark::State& state) {
    const SpectralDensity sdf = lorentzian_from_gamma(1.0, 0.0, 10.0);
    const TimeGrid grid = make_grid(1e-3, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(memory_kernel(sdf, 0.0, grid));
}
BENCHMARK(BM_MemoryKernelLorentzian)->Arg(1000)->Arg(5000);

static void BM_VolterraAmplitude(benchmark::State& state) {
    const auto points = static_cast<std::size_t>(state.range(0));
    const TimeGrid grid = make_grid(1e-3, points);
    const SpectralDensity sdf = lorentzian_from_gamma(1.0, 0.0, 10.0);
    const MemoryKernel kernel = memory_kernel(sdf, 0.0, grid);
    for (auto _ : state) benchmark::DoNotOptimize(volterra_amplitude(kernel, 0.0, grid));
    state.SetComplexityN(points);
}
BENCHMARK(BM_VolterraAmplitude)->Arg(500)->Arg(1000)->Arg(2000)->Complexity();

BENCHMARK_MAIN();
