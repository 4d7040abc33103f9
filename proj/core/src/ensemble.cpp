#include "nmqt/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nmqt/errors.hpp"
#include "nmqt/rng.hpp"
#include "nmqt/superop.hpp"

namespace nmqt {

namespace {

struct Quad {
    double ee = 0.0, gg = 0.0, eg_re = 0.0, eg_im = 0.0;
};

Quad quad_of(const DensityMatrix& rho) {
    return {rho.rho_ee, rho.rho_gg, std::real(rho.rho_eg), std::imag(rho.rho_eg)};
}

// Fixed-order pairwise tree: deterministic floating-point sums regardless of
// how the trajectories were scheduled.
template <typename Get>
double pairwise_sum(std::size_t lo, std::size_t hi, const Get& get) {
    const std::size_t n = hi - lo;
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += get(i);
        return s;
    }
    const std::size_t mid = lo + n / 2;
    return pairwise_sum(lo, mid, get) + pairwise_sum(mid, hi, get);
}

std::vector<std::size_t> sample_indices(const std::vector<double>& sample_times,
                                        double dt, std::size_t steps) {
    std::vector<std::size_t> indices;
    indices.reserve(sample_times.size());
    for (double t : sample_times) {
        const auto idx = static_cast<long long>(std::llround(t / dt));
        if (idx < 0 || static_cast<std::size_t>(idx) > steps) {
            std::ostringstream msg;
            msg << "run_ensemble: sample time " << t << " outside the simulated horizon";
            throw std::invalid_argument(msg.str());
        }
        indices.push_back(static_cast<std::size_t>(idx));
    }
    return indices;
}

}  // namespace

EnsembleResult run_ensemble(const EnsembleConfig& config, const EnsemblePhysics& physics) {
    if (config.n_traj < 1)
        throw std::invalid_argument("run_ensemble: n_traj must be >= 1");
    if (config.sample_times.empty())
        throw std::invalid_argument("run_ensemble: need at least one sample time");

    const double dt = physics.decay.dt;
    const auto steps = static_cast<std::size_t>(std::llround(physics.t_final / dt));
    const std::vector<std::size_t> indices = sample_indices(config.sample_times, dt, steps);
    const std::size_t n_samples = indices.size();
    const auto n_traj = static_cast<std::size_t>(config.n_traj);

    // Record positions sorted by step index so a single forward cursor works
    // even when the caller's sample times are unsorted.
    std::vector<std::size_t> order(n_samples);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return indices[a] < indices[b]; });

    // Shared per-kind stepping machinery (pure, safe to share).
    const JumpStepper jump_stepper(physics.drive, physics.decay);
    const HomodyneConfig hconfig{physics.homodyne_phi, dt};
    const DensityMatrix rho0 = DensityMatrix::pure(physics.initial);
    const double sqrt_dt = std::sqrt(dt);

    std::vector<Quad> samples(n_traj * n_samples);
    std::vector<long> clamps(n_traj, 0);

    const auto run_one = [&](std::size_t traj) {
        Rng rng = trajectory_stream(config.master_seed, traj);
        std::size_t cursor = 0;
        const auto record = [&](std::size_t step_idx, const DensityMatrix& rho) {
            while (cursor < n_samples && indices[order[cursor]] == step_idx) {
                samples[traj * n_samples + order[cursor]] = quad_of(rho);
                ++cursor;
            }
        };
        if (config.kind == TrajectoryKind::mcwf) {
            PureState state = physics.initial;
            record(0, DensityMatrix::pure(state));
            for (std::size_t k = 1; k <= steps; ++k) {
                state = jump_stepper.step(state, rng.uniform()).first;
                if (cursor < n_samples && indices[order[cursor]] == k)
                    record(k, DensityMatrix::pure(state));
            }
        } else {
            DensityMatrix rho = rho0;
            record(0, rho);
            for (std::size_t k = 1; k <= steps; ++k) {
                const HomodyneStepResult res =
                    homodyne_step(rho, physics.drive, physics.decay.gamma_eff, hconfig,
                                  sqrt_dt * rng.gaussian());
                rho = res.rho;
                if (res.clamped) ++clamps[traj];
                record(k, rho);
            }
        }
    };

    // Trajectories are independent; workers own disjoint sample slots.  A
    // failure aborts the whole run, reporting the smallest failing index.
    unsigned n_threads = config.threads == 0 ? std::thread::hardware_concurrency()
                                             : config.threads;
    if (n_threads == 0) n_threads = 1;
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(n_traj));

    std::mutex failure_mutex;
    std::size_t failed_index = n_traj;
    std::string failure_what;
    const auto note_failure = [&](std::size_t index, const char* what) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (index < failed_index) {
            failed_index = index;
            failure_what = what;
        }
    };

    if (n_threads <= 1) {
        for (std::size_t i = 0; i < n_traj; ++i) {
            try {
                run_one(i);
            } catch (const std::exception& ex) {
                note_failure(i, ex.what());
                break;
            }
        }
    } else {
        std::vector<std::thread> workers;
        workers.reserve(n_threads);
        std::atomic<std::size_t> next{0};
        for (unsigned w = 0; w < n_threads; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < n_traj; i = next.fetch_add(1)) {
                    try {
                        run_one(i);
                    } catch (const std::exception& ex) {
                        note_failure(i, ex.what());
                        return;
                    }
                }
            });
        }
        for (auto& t : workers) t.join();
    }

    if (failed_index != n_traj) {
        std::ostringstream msg;
        msg << "run_ensemble: trajectory " << failed_index << " (master_seed "
            << config.master_seed << ") failed: " << failure_what;
        throw TrajectoryError(msg.str(), static_cast<long>(failed_index),
                              config.master_seed);
    }

    // Deterministic reduction: mean then standard error, both pairwise.
    EnsembleResult result;
    result.times.reserve(n_samples);
    for (std::size_t k = 0; k < n_samples; ++k)
        result.times.push_back(dt * static_cast<double>(indices[k]));
    result.mean_rho.resize(n_samples);
    result.stderr_rho.resize(n_samples);
    result.stderr_valid = n_traj > 1;
    result.clamp_count = static_cast<long>(pairwise_sum(0, n_traj, [&](std::size_t i) {
        return static_cast<double>(clamps[i]);
    }));

    const double inv_n = 1.0 / static_cast<double>(n_traj);
    for (std::size_t k = 0; k < n_samples; ++k) {
        const auto component = [&](std::size_t i, int c) -> double {
            const Quad& q = samples[i * n_samples + k];
            switch (c) {
                case 0: return q.ee;
                case 1: return q.gg;
                case 2: return q.eg_re;
                default: return q.eg_im;
            }
        };
        double mean[4];
        for (int c = 0; c < 4; ++c)
            mean[c] = inv_n * pairwise_sum(0, n_traj, [&](std::size_t i) {
                return component(i, c);
            });
        result.mean_rho[k] = {mean[0], mean[1], {mean[2], mean[3]}};

        if (result.stderr_valid) {
            double se[4];
            for (int c = 0; c < 4; ++c) {
                const double ssq = pairwise_sum(0, n_traj, [&](std::size_t i) {
                    const double d = component(i, c) - mean[c];
                    return d * d;
                });
                se[c] = std::sqrt(ssq / (static_cast<double>(n_traj - 1) *
                                         static_cast<double>(n_traj)));
            }
            result.stderr_rho[k] = {se[0], se[1], se[2], se[3]};
        } else {
            const double nan = std::numeric_limits<double>::quiet_NaN();
            result.stderr_rho[k] = {nan, nan, nan, nan};
        }
    }
    return result;
}

EnsembleResult run_ensemble(const EnsembleConfig& config, const SystemParams& params,
                            const ScalingParams& scaling, const PureState& initial,
                            double t_final, double dt, double homodyne_phi) {
    EnsemblePhysics physics;
    physics.drive = {params.delta_eg, params.rabi};
    physics.decay = effective_decay_scaled(scaling, dt);
    physics.initial = initial;
    physics.t_final = t_final;
    physics.homodyne_phi = homodyne_phi;
    return run_ensemble(config, physics);
}

CompareReport compare_series(std::span<const double> a, std::span<const double> b,
                             std::span<const double> stderr_vals, double threshold) {
    if (a.size() != b.size() || a.size() != stderr_vals.size())
        throw GridError("compare_series: series lengths differ");
    CompareReport report;
    report.threshold = threshold;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = std::abs(a[i] - b[i]);
        const double z = stderr_vals[i] > 0.0
                             ? diff / stderr_vals[i]
                             : (diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
        if (z > report.max_z) {
            report.max_z = z;
            report.argmax = i;
        }
    }
    report.pass = report.max_z <= threshold;
    return report;
}

}  // namespace nmqt
