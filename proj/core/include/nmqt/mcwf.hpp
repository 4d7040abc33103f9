#ifndef NMQT_MCWF_HPP
#define NMQT_MCWF_HPP

#include <complex>
#include <cstdint>
#include <utility>

#include "nmqt/amplitude.hpp"
#include "nmqt/params.hpp"
#include "nmqt/state.hpp"
#include "nmqt/trajectory.hpp"

namespace nmqt {

/// Coarse-step decay data consumed by the trajectory steppers: the survival
/// amplitude abar over one step dt and the matching effective rate.
struct EffectiveDecay {
    double gamma_eff = 0.0;
    std::complex<double> abar{1.0, 0.0};
    double dt = 0.0;
};

/// Scaling route: gamma_eff from the bracket formula, abar from the scaled
/// amplitude at t = dt.
EffectiveDecay effective_decay_scaled(const ScalingParams& scaling, double dt);

/// Explicit route: abar = a(tau)^n over dt = n*tau; the rate is the linear
/// empirical flavor, which makes |alpha|^2 * gamma_eff * dt the exact
/// one-step click probability 1 - |abar|^2 at full excitation.
EffectiveDecay effective_decay_repeated(double lambda, double gamma, double e,
                                        const MeasurementSchedule& schedule);

/// One coarse Monte-Carlo wave-function step driven by a uniform draw u.
/// Jump branch (u < |alpha|^2 gamma_eff dt): collapse to |g>.
/// No-jump branch: Strang-split drive/decay
///   e^{-i H dt/2} diag(abar, 1) e^{-i H dt/2}, then renormalize.
/// Guards: gamma_eff*dt <= 0.1 and p_jump < 1 (StepSizeError).
std::pair<PureState, bool> mcwf_step(const PureState& state,
                                     const MeasurementSchedule& schedule,
                                     double gamma_eff, std::complex<double> abar,
                                     const DriveHamiltonian& h, double u);

/// Precomputed stepper used by trajectory and ensemble loops; mcwf_step is
/// a one-shot wrapper around it so both paths share bit-identical updates.
class JumpStepper {
  public:
    JumpStepper(const DriveHamiltonian& h, const EffectiveDecay& decay);

    std::pair<PureState, bool> step(const PureState& state, double u) const;

    double dt() const { return dt_; }

  private:
    Mat2 u_half_;
    std::complex<double> abar_;
    double jump_coeff_;  // gamma_eff * dt
    double dt_;
};

/// Full record of a jump trajectory on the grid t_k = k*dt, k = 0..steps,
/// steps = round(t_final/dt).  Deterministic in (inputs, seed): the uniform
/// stream is trajectory_stream(seed, 0).
TrajectoryRecord mcwf_trajectory(const PureState& initial, const DriveHamiltonian& h,
                                 const EffectiveDecay& decay, double t_final,
                                 std::uint64_t seed);

/// Convenience overload wiring SystemParams/ScalingParams the way the
/// ensemble runner does.
TrajectoryRecord mcwf_trajectory(const PureState& initial, const SystemParams& params,
                                 const ScalingParams& scaling, double t_final,
                                 double dt, std::uint64_t seed);

}  // namespace nmqt

#endif
