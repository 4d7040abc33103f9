#include "nmqt/homodyne.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nmqt/rng.hpp"
#include "nmqt/superop.hpp"

namespace nmqt {

namespace {

constexpr double kEigClampTol = 1e-9;

// Project onto the dominant eigenvector (the PSD projection of a trace-one
// 2x2 Hermitian matrix with one negative eigenvalue, renormalized).
DensityMatrix clamp_positive(const DensityMatrix& rho) {
    const double mid = 0.5 * (rho.rho_ee - rho.rho_gg);
    const double dq = std::sqrt(mid * mid + std::norm(rho.rho_eg));
    const double lam_max = 0.5 * rho.trace() + dq;
    if (std::abs(rho.rho_eg) == 0.0) {
        return rho.rho_ee >= rho.rho_gg ? DensityMatrix::excited() : DensityMatrix::ground();
    }
    // eigenvector (b, lam - a) for [[a, b], [b*, d]]
    const Complex v0 = rho.rho_eg;
    const double v1 = lam_max - rho.rho_ee;
    const double n = std::norm(v0) + v1 * v1;
    return {std::norm(v0) / n, v1 * v1 / n, v0 * v1 / n};
}

}  // namespace

HomodyneStepResult homodyne_step(const DensityMatrix& rho, const DriveHamiltonian& h,
                                 double rate, const HomodyneConfig& config, double dW) {
    if (!(config.dt > 0.0)) throw std::invalid_argument("homodyne_step: dt must be > 0");
    const double dt = config.dt;
    const double sqrt_rate = std::sqrt(rate);

    const double current =
        sqrt_rate * std::real(rho.rho_eg / std::polar(1.0, config.phi)) + dW / dt;

    const DensityMatrix drift = lindblad_rhs(rho, h, rate);
    const DensityMatrix diffusion = measurement_superop(rho, config.phi);
    DensityMatrix next = rho + dt * drift + (sqrt_rate * dW) * diffusion;

    // Hermitian by representation; renormalize the trace, then repair any
    // discretization-induced negativity (counted).
    const double tr = next.trace();
    next = (1.0 / tr) * next;

    bool clamped = false;
    if (next.min_eigenvalue() < -kEigClampTol) {
        next = clamp_positive(next);
        clamped = true;
    }
    return {next, current, clamped};
}

namespace {

TrajectoryRecord run_homodyne(const DensityMatrix& initial, const DriveHamiltonian& h,
                              double rate, const HomodyneConfig& config, double t_final,
                              std::uint64_t seed, const std::vector<double>* noise) {
    if (!(config.dt > 0.0))
        throw std::invalid_argument("homodyne_trajectory: dt must be > 0");
    const auto steps = static_cast<std::size_t>(std::llround(t_final / config.dt));
    if (noise && noise->size() < steps)
        throw std::invalid_argument("homodyne_trajectory: need one increment per step");

    TrajectoryRecord rec;
    rec.kind = TrajectoryKind::homodyne;
    rec.seed = seed;
    rec.times.reserve(steps + 1);
    rec.rho.reserve(steps + 1);
    rec.current.reserve(steps);
    rec.times.push_back(0.0);
    rec.rho.push_back(initial);

    Rng rng = trajectory_stream(seed, 0);
    const double sqrt_dt = std::sqrt(config.dt);
    DensityMatrix rho = initial;
    for (std::size_t k = 0; k < steps; ++k) {
        const double dW = noise ? (*noise)[k] : sqrt_dt * rng.gaussian();
        const HomodyneStepResult res = homodyne_step(rho, h, rate, config, dW);
        rho = res.rho;
        if (res.clamped) ++rec.clamp_count;
        rec.times.push_back(config.dt * static_cast<double>(k + 1));
        rec.rho.push_back(rho);
        rec.current.push_back(res.current);
    }
    return rec;
}

}  // namespace

TrajectoryRecord homodyne_trajectory(const DensityMatrix& initial,
                                     const DriveHamiltonian& h, double rate,
                                     const HomodyneConfig& config, double t_final,
                                     std::uint64_t seed) {
    return run_homodyne(initial, h, rate, config, t_final, seed, nullptr);
}

TrajectoryRecord homodyne_trajectory(const DensityMatrix& initial,
                                     const SystemParams& params,
                                     const ScalingParams& scaling,
                                     const HomodyneConfig& config, double t_final,
                                     std::uint64_t seed) {
    const DriveHamiltonian h{params.delta_eg, params.rabi};
    return run_homodyne(initial, h, effective_rate_scaled(scaling), config, t_final,
                        seed, nullptr);
}

TrajectoryRecord homodyne_trajectory_with_noise(const DensityMatrix& initial,
                                                const DriveHamiltonian& h, double rate,
                                                const HomodyneConfig& config,
                                                double t_final,
                                                std::span<const double> increments) {
    const std::vector<double> noise(increments.begin(), increments.end());
    return run_homodyne(initial, h, rate, config, t_final, 0, &noise);
}

}  // namespace nmqt
