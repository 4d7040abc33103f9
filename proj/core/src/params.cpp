#include "nmqt/params.hpp"

#include <stdexcept>

namespace nmqt {

SystemParams make_system_params(double e_e, double e_g, double omega0,
                                double rabi, double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("SystemParams: gamma must be > 0");
    SystemParams p;
    p.e_e = e_e;
    p.e_g = e_g;
    p.delta_eg = e_e - e_g;
    p.rabi = rabi;
    p.detuning_e = p.delta_eg - omega0;
    p.gamma = gamma;
    return p;
}

ScalingParams make_scaling(double x, double c, double gamma) {
    if (!(x > 0.0)) throw std::invalid_argument("ScalingParams: x must be > 0");
    if (!(gamma > 0.0)) throw std::invalid_argument("ScalingParams: gamma must be > 0");
    return {x, c, {1.0, -c}, gamma};
}

ScalingParams scaling_from_explicit(double lambda, double tau, double e, double gamma) {
    if (!(lambda > 0.0)) throw std::invalid_argument("ScalingParams: lambda must be > 0");
    if (!(tau > 0.0)) throw std::invalid_argument("ScalingParams: tau must be > 0");
    return make_scaling(lambda * tau, e / lambda, gamma);
}

MeasurementSchedule make_schedule(double tau, long n) {
    if (!(tau > 0.0)) throw std::invalid_argument("MeasurementSchedule: tau must be > 0");
    if (n < 1) throw std::invalid_argument("MeasurementSchedule: n must be >= 1");
    return {tau, n, static_cast<double>(n) * tau};
}

ZenoParams make_zeno_params(double k_coupling, double tau, long n) {
    if (!(k_coupling >= 0.0))
        throw std::invalid_argument("ZenoParams: k_coupling must be >= 0");
    if (!(tau > 0.0)) throw std::invalid_argument("ZenoParams: tau must be > 0");
    if (n < 0) throw std::invalid_argument("ZenoParams: n must be >= 0");
    return {k_coupling, tau, n};
}

TimeGrid make_grid(double h, std::size_t points) {
    if (!(h > 0.0)) throw std::invalid_argument("TimeGrid: spacing must be > 0");
    if (points == 0) throw std::invalid_argument("TimeGrid: need at least one point");
    return {h, points};
}

}  // namespace nmqt
