#ifndef NMQT_MASTER_HPP
#define NMQT_MASTER_HPP

#include <vector>

#include "nmqt/state.hpp"
#include "nmqt/superop.hpp"

namespace nmqt {

struct DensitySeries {
    std::vector<double> times;
    std::vector<DensityMatrix> states;
};

/// Classical RK4 integration of the effective master equation
/// drho/dt = -i[H_S, rho] + rate D[sigma-]rho on the grid t_k = k*dt,
/// k = 0..round(t_final/dt).  Requires dt * max(|delta|, |rabi|, rate) <= 0.1
/// (StepSizeError); the traceless right-hand side keeps the trace drift at
/// rounding level.
DensitySeries master_evolve(const DensityMatrix& rho0, const DriveHamiltonian& h,
                            double rate, double t_final, double dt);

}  // namespace nmqt

#endif
