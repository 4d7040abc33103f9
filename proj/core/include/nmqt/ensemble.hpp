#ifndef NMQT_ENSEMBLE_HPP
#define NMQT_ENSEMBLE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "nmqt/homodyne.hpp"
#include "nmqt/mcwf.hpp"
#include "nmqt/state.hpp"
#include "nmqt/trajectory.hpp"

namespace nmqt {

struct EnsembleConfig {
    long n_traj = 1;
    TrajectoryKind kind = TrajectoryKind::mcwf;
    std::uint64_t master_seed = 0;
    std::vector<double> sample_times;
    unsigned threads = 0;  // 0 = hardware concurrency
};

/// Physics shared by every trajectory in the ensemble.
struct EnsemblePhysics {
    DriveHamiltonian drive;
    EffectiveDecay decay;
    PureState initial;
    double t_final = 0.0;
    double homodyne_phi = 0.0;
};

/// Per-component standard error of the ensemble mean.
struct ComponentStderr {
    double ee = 0.0;
    double gg = 0.0;
    double eg_re = 0.0;
    double eg_im = 0.0;
};

struct EnsembleResult {
    std::vector<double> times;
    std::vector<DensityMatrix> mean_rho;
    std::vector<ComponentStderr> stderr_rho;
    bool stderr_valid = false;  // false when n_traj == 1
    long clamp_count = 0;
};

/// Runs n_traj independent trajectories and averages them (pure states as
/// projectors).  Trajectory i draws from trajectory_stream(master_seed, i)
/// and the reduction is a fixed-order pairwise tree, so the result is
/// bit-identical for any thread count.  A failing trajectory aborts with a
/// TrajectoryError carrying its index and seed.
EnsembleResult run_ensemble(const EnsembleConfig& config, const EnsemblePhysics& physics);

/// Convenience overload building the decay data from the scaling route.
EnsembleResult run_ensemble(const EnsembleConfig& config, const SystemParams& params,
                            const ScalingParams& scaling, const PureState& initial,
                            double t_final, double dt, double homodyne_phi = 0.0);

struct CompareReport {
    double max_z = 0.0;
    std::size_t argmax = 0;
    double threshold = 3.0;
    bool pass = true;
};

/// Pointwise z-scores |a - b| / stderr on aligned grids; pass iff
/// max_z <= threshold.  Zero stderr yields z = 0 when the values agree and
/// +inf otherwise.
CompareReport compare_series(std::span<const double> a, std::span<const double> b,
                             std::span<const double> stderr_vals,
                             double threshold = 3.0);

}  // namespace nmqt

#endif
