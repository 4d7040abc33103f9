#ifndef NMQT_PARAMS_HPP
#define NMQT_PARAMS_HPP

#include <complex>
#include <cstddef>

namespace nmqt {

/// Atom and environment scales for the explicit (finite-bandwidth)
/// parameterization.  detuning_e is the offset E = (E_e - E_g) - omega0
/// between the atomic transition and the spectral center.
struct SystemParams {
    double e_e = 0.0;
    double e_g = 0.0;
    double delta_eg = 0.0;   // e_e - e_g, kept exactly
    double rabi = 0.0;       // drive amplitude Omega
    double detuning_e = 0.0; // E = delta_eg - omega0
    double gamma = 1.0;
};

SystemParams make_system_params(double e_e, double e_g, double omega0,
                                double rabi, double gamma);

/// Dimensionless measurement/bandwidth variables: x = lambda*tau,
/// c = E/lambda, kappa = 1 - i*c.
struct ScalingParams {
    double x = 0.0;
    double c = 0.0;
    std::complex<double> kappa{1.0, 0.0};
    double gamma = 1.0;
};

ScalingParams make_scaling(double x, double c, double gamma);
ScalingParams scaling_from_explicit(double lambda, double tau, double e, double gamma);

/// n measurements at interval tau per coarse step dt = n*tau.
struct MeasurementSchedule {
    double tau = 0.0;
    long n = 0;
    double dt = 0.0;
};

MeasurementSchedule make_schedule(double tau, long n);

/// Short-time expansion inputs for the repeated-projection sequence;
/// k_coupling is K = sum_r V_r^2 (the integrated spectrum).
struct ZenoParams {
    double k_coupling = 0.0;
    double tau = 0.0;
    long n = 0;
};

ZenoParams make_zeno_params(double k_coupling, double tau, long n);

/// Uniform grid t_k = k*h, k = 0 .. points-1.
struct TimeGrid {
    double h = 0.0;
    std::size_t points = 0;

    double t_max() const { return points == 0 ? 0.0 : h * static_cast<double>(points - 1); }
};

TimeGrid make_grid(double h, std::size_t points);

}  // namespace nmqt

#endif
