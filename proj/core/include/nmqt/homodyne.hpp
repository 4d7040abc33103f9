#ifndef NMQT_HOMODYNE_HPP
#define NMQT_HOMODYNE_HPP

#include <cstdint>
#include <span>
#include <utility>

#include "nmqt/mcwf.hpp"
#include "nmqt/state.hpp"
#include "nmqt/trajectory.hpp"

namespace nmqt {

/// Local-oscillator phase and integration step of the diffusive unraveling.
struct HomodyneConfig {
    double phi = 0.0;
    double dt = 0.0;
};

struct HomodyneStepResult {
    DensityMatrix rho;
    double current = 0.0;
    bool clamped = false;
};

/// Euler-Maruyama update for the diffusive trajectory equation,
///   rho' = rho + (-i[H,rho] + rate D[s-]rho) dt + sqrt(rate) H[e^{-i phi} s-]rho dW,
/// followed by trace renormalization; eigenvalues below -1e-9 are clamped by
/// projection (counted, never silent).  The current sample uses the pre-update
/// state: I = sqrt(rate) Re(e^{-i phi} rho_eg) + dW/dt.
HomodyneStepResult homodyne_step(const DensityMatrix& rho, const DriveHamiltonian& h,
                                 double rate, const HomodyneConfig& config, double dW);

/// Diffusive trajectory with Gaussian increments dW ~ N(0, dt) drawn from
/// trajectory_stream(seed, 0).
TrajectoryRecord homodyne_trajectory(const DensityMatrix& initial,
                                     const DriveHamiltonian& h, double rate,
                                     const HomodyneConfig& config, double t_final,
                                     std::uint64_t seed);

/// Convenience overload mirroring the mcwf one: drive from SystemParams,
/// rate from the scaling route.
TrajectoryRecord homodyne_trajectory(const DensityMatrix& initial,
                                     const SystemParams& params,
                                     const ScalingParams& scaling,
                                     const HomodyneConfig& config, double t_final,
                                     std::uint64_t seed);

/// Deterministic-noise variant (test hook): increments supplied by the
/// caller, one per step.
TrajectoryRecord homodyne_trajectory_with_noise(const DensityMatrix& initial,
                                                const DriveHamiltonian& h, double rate,
                                                const HomodyneConfig& config,
                                                double t_final,
                                                std::span<const double> increments);

}  // namespace nmqt

#endif
