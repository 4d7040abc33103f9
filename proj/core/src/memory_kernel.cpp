#include "nmqt/memory_kernel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "nmqt/errors.hpp"

namespace nmqt {

namespace {

MemoryKernel lorentzian_kernel(const LorentzianSdf& sdf, double e_g, const TimeGrid& grid) {
    // F(s) = -i (gamma*lambda/2) e^{-i(omega0 + e_g) s} e^{-lambda s}
    const double gamma = sdf.gamma();
    const std::complex<double> prefactor{0.0, -0.5 * gamma * sdf.lambda};
    const std::complex<double> decay{-sdf.lambda, -(sdf.omega0 + e_g)};

    MemoryKernel kernel;
    kernel.grid = grid;
    kernel.values.resize(grid.points);
    for (std::size_t k = 0; k < grid.points; ++k) {
        const double s = grid.h * static_cast<double>(k);
        kernel.values[k] = prefactor * std::exp(decay * s);
    }
    return kernel;
}

MemoryKernel tabulated_kernel(const TabulatedSdf& sdf, double e_g, const TimeGrid& grid) {
    const double s_max = grid.t_max();
    double max_spacing = 0.0;
    for (std::size_t i = 1; i < sdf.omega.size(); ++i)
        max_spacing = std::max(max_spacing, sdf.omega[i] - sdf.omega[i - 1]);
    if (max_spacing * s_max >= 0.25 * std::numbers::pi) {
        std::ostringstream msg;
        msg << "memory_kernel: frequency table too coarse to resolve the oscillation "
               "at the largest lag (max domega * s_max = "
            << max_spacing * s_max << ", needs < pi/4 = " << 0.25 * std::numbers::pi << ")";
        throw ResolutionError(msg.str());
    }

    MemoryKernel kernel;
    kernel.grid = grid;
    kernel.values.resize(grid.points);
    const std::size_t m = sdf.omega.size();
    for (std::size_t k = 0; k < grid.points; ++k) {
        const double s = grid.h * static_cast<double>(k);
        // trapezoid of D(w) e^{-i(w + e_g) s} over the table range
        std::complex<double> acc{0.0, 0.0};
        std::complex<double> prev = sdf.density[0] * std::polar(1.0, -(sdf.omega[0] + e_g) * s);
        for (std::size_t i = 1; i < m; ++i) {
            const std::complex<double> cur =
                sdf.density[i] * std::polar(1.0, -(sdf.omega[i] + e_g) * s);
            acc += 0.5 * (sdf.omega[i] - sdf.omega[i - 1]) * (prev + cur);
            prev = cur;
        }
        kernel.values[k] = std::complex<double>{0.0, -1.0} * acc;
    }
    return kernel;
}

}  // namespace

MemoryKernel memory_kernel(const SpectralDensity& sdf, double e_g, const TimeGrid& grid) {
    if (const auto* lor = std::get_if<LorentzianSdf>(&sdf))
        return lorentzian_kernel(*lor, e_g, grid);
    return tabulated_kernel(std::get<TabulatedSdf>(sdf), e_g, grid);
}

}  // namespace nmqt
