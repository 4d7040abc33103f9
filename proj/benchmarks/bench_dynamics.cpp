#include <benchmark/benchmark.h>

#include "nmqt/ensemble.hpp"
#include "nmqt/homodyne.hpp"
#include "nmqt/master.hpp"
#include "nmqt/mcwf.hpp"
#include "nmqt/rng.hpp"

using namespace nmqt;

namespace {

EnsemblePhysics driven_demo_physics(double t_final) {
    EnsemblePhysics p;
    p.drive = {0.0, 0.1};
    p.decay = effective_decay_scaled(make_scaling(0.2, 0.0, 1.0), 0.01);
    p.initial = PureState::excited();
    p.t_final = t_final;
    return p;
}

}  // namespace

static void BM_McwfStep(benchmark::State& state) {
    const EffectiveDecay decay = effective_decay_scaled(make_scaling(0.2, 0.0, 1.0), 0.01);
    const JumpStepper stepper({0.0, 0.1}, decay);
    Rng rng(1);
    PureState s = PureState::excited();
    for (auto _ : state) {
        s = stepper.step(s, rng.uniform()).first;
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_McwfStep);

static void BM_HomodyneStep(benchmark::State& state) {
    const HomodyneConfig cfg{0.0, 0.01};
    Rng rng(1);
    DensityMatrix rho = DensityMatrix::excited();
    const double sqrt_dt = std::sqrt(cfg.dt);
    for (auto _ : state) {
        rho = homodyne_step(rho, {0.0, 0.1}, 0.0936537653899, cfg, sqrt_dt * rng.gaussian())
                  .rho;
        benchmark::DoNotOptimize(rho);
    }
}
BENCHMARK(BM_HomodyneStep);

static void BM_MasterEvolve(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(master_evolve(DensityMatrix::excited(), {0.0, 0.1},
                                               0.0936537653899, 50.0, 0.01));
}
BENCHMARK(BM_MasterEvolve);

static void BM_EnsembleThreads(benchmark::State& state) {
    const EnsemblePhysics physics = driven_demo_physics(10.0);
    EnsembleConfig config;
    config.n_traj = 200;
    config.kind = TrajectoryKind::mcwf;
    config.master_seed = 1;
    config.sample_times = {5.0, 10.0};
    config.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_ensemble(config, physics));
}
BENCHMARK(BM_EnsembleThreads)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

BENCHMARK_MAIN();
