#include "nmqt/master.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nmqt/errors.hpp"

namespace nmqt {

DensitySeries master_evolve(const DensityMatrix& rho0, const DriveHamiltonian& h,
                            double rate, double t_final, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("master_evolve: dt must be > 0");
    if (!(t_final >= 0.0)) throw std::invalid_argument("master_evolve: t_final must be >= 0");
    const double fastest = std::max({std::abs(h.delta_eg), std::abs(h.rabi), rate});
    if (dt * fastest > 0.1) {
        std::ostringstream msg;
        msg << "master_evolve: dt * max(delta, rabi, rate) = " << dt * fastest
            << " exceeds the 0.1 step guard";
        throw StepSizeError(msg.str());
    }

    const auto steps = static_cast<std::size_t>(std::llround(t_final / dt));
    DensitySeries series;
    series.times.reserve(steps + 1);
    series.states.reserve(steps + 1);
    series.times.push_back(0.0);
    series.states.push_back(rho0);

    DensityMatrix rho = rho0;
    for (std::size_t k = 0; k < steps; ++k) {
        const DensityMatrix k1 = lindblad_rhs(rho, h, rate);
        const DensityMatrix k2 = lindblad_rhs(rho + (0.5 * dt) * k1, h, rate);
        const DensityMatrix k3 = lindblad_rhs(rho + (0.5 * dt) * k2, h, rate);
        const DensityMatrix k4 = lindblad_rhs(rho + dt * k3, h, rate);
        rho = rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        series.times.push_back(dt * static_cast<double>(k + 1));
        series.states.push_back(rho);
    }
    return series;
}

}  // namespace nmqt
