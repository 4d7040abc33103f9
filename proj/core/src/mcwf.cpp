#include "nmqt/mcwf.hpp"

#include <cmath>
#include <sstream>

#include "nmqt/errors.hpp"
#include "nmqt/rng.hpp"

namespace nmqt {

namespace {
constexpr double kRateStepGuard = 0.1;
}

EffectiveDecay effective_decay_scaled(const ScalingParams& scaling, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("effective_decay_scaled: dt must be > 0");
    return {effective_rate_scaled(scaling), amplitude_scaled(dt, scaling), dt};
}

EffectiveDecay effective_decay_repeated(double lambda, double gamma, double e,
                                        const MeasurementSchedule& schedule) {
    const std::complex<double> abar =
        survival_repeated(schedule.tau, schedule.n, lambda, gamma, e);
    const double rate = effective_rate_empirical(abar, schedule.dt, RateFlavor::linear);
    return {rate, abar, schedule.dt};
}

JumpStepper::JumpStepper(const DriveHamiltonian& h, const EffectiveDecay& decay)
    : u_half_(drive_unitary(h, 0.5 * decay.dt)),
      abar_(decay.abar),
      jump_coeff_(decay.gamma_eff * decay.dt),
      dt_(decay.dt) {
    if (!(decay.dt > 0.0)) throw std::invalid_argument("JumpStepper: dt must be > 0");
    if (jump_coeff_ > kRateStepGuard) {
        std::ostringstream msg;
        msg << "mcwf step: gamma_eff * dt = " << jump_coeff_ << " exceeds the "
            << kRateStepGuard << " guard; reduce dt";
        throw StepSizeError(msg.str());
    }
}

std::pair<PureState, bool> JumpStepper::step(const PureState& state, double u) const {
    const double p_jump = std::norm(state.alpha) * jump_coeff_;
    if (p_jump >= 1.0)
        throw StepSizeError("mcwf step: jump probability >= 1; dt too large");
    if (u < p_jump) return {PureState::ground(), true};  // sigma- collapse

    // Strang split: half drive, decay factor on |e>, half drive
    PureState s = u_half_.apply(state);
    s.alpha *= abar_;
    s = u_half_.apply(s);
    return {s.normalized(), false};
}

std::pair<PureState, bool> mcwf_step(const PureState& state,
                                     const MeasurementSchedule& schedule,
                                     double gamma_eff, std::complex<double> abar,
                                     const DriveHamiltonian& h, double u) {
    const JumpStepper stepper(h, EffectiveDecay{gamma_eff, abar, schedule.dt});
    return stepper.step(state, u);
}

TrajectoryRecord mcwf_trajectory(const PureState& initial, const DriveHamiltonian& h,
                                 const EffectiveDecay& decay, double t_final,
                                 std::uint64_t seed) {
    const JumpStepper stepper(h, decay);
    const auto steps = static_cast<std::size_t>(std::llround(t_final / decay.dt));

    TrajectoryRecord rec;
    rec.kind = TrajectoryKind::mcwf;
    rec.seed = seed;
    rec.times.reserve(steps + 1);
    rec.pure.reserve(steps + 1);
    rec.jumps.reserve(steps);
    rec.times.push_back(0.0);
    rec.pure.push_back(initial);

    Rng rng = trajectory_stream(seed, 0);
    PureState state = initial;
    for (std::size_t k = 0; k < steps; ++k) {
        auto [next, jumped] = stepper.step(state, rng.uniform());
        state = next;
        rec.times.push_back(decay.dt * static_cast<double>(k + 1));
        rec.pure.push_back(state);
        rec.jumps.push_back(jumped ? 1 : 0);
    }
    return rec;
}

TrajectoryRecord mcwf_trajectory(const PureState& initial, const SystemParams& params,
                                 const ScalingParams& scaling, double t_final,
                                 double dt, std::uint64_t seed) {
    const DriveHamiltonian h{params.delta_eg, params.rabi};
    return mcwf_trajectory(initial, h, effective_decay_scaled(scaling, dt), t_final, seed);
}

}  // namespace nmqt
