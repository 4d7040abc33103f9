#include "nmqt/volterra.hpp"

#include <cmath>
#include <sstream>

#include "nmqt/errors.hpp"

namespace nmqt {

namespace {
constexpr double kBlowupTol = 1.01;
}

AmplitudeSeries volterra_amplitude(const MemoryKernel& kernel, double e_e,
                                   const TimeGrid& grid) {
    if (grid.points == 0 || kernel.grid.points == 0)
        throw GridError("volterra_amplitude: empty grid");

    // kernel spacing must evenly divide the output spacing
    const double ratio = grid.h / kernel.grid.h;
    const auto stride = static_cast<std::size_t>(std::llround(ratio));
    if (stride < 1 || std::abs(ratio - static_cast<double>(stride)) > 1e-9 * ratio)
        throw GridError("volterra_amplitude: kernel spacing must equal or evenly divide "
                        "the output grid spacing");
    const std::size_t needed = (grid.points - 1) * stride + 1;
    if (kernel.values.size() < needed) {
        std::ostringstream msg;
        msg << "volterra_amplitude: kernel covers " << kernel.values.size()
            << " samples but the horizon needs " << needed;
        throw GridError(msg.str());
    }

    const double h = grid.h;
    const std::complex<double> minus_i{0.0, -1.0};
    const auto f_at = [&](std::size_t k) { return kernel.values[k * stride]; };

    AmplitudeSeries series;
    series.grid = grid;
    series.values.assign(grid.points, {0.0, 0.0});
    series.values[0] = {1.0, 0.0};

    // i da/dt = e_e a + I(t), I(t_k) = h [F_k a_0 / 2 + sum F_{k-j} a_j + F_0 a_k / 2]
    const std::complex<double> f0 = f_at(0);
    for (std::size_t k = 0; k + 1 < grid.points; ++k) {
        const std::complex<double>& a_k = series.values[k];

        // open history sum shared by the k and k+1 evaluations
        std::complex<double> hist_k{0.0, 0.0};      // sum_{j=1}^{k-1} F_{k-j} a_j
        std::complex<double> hist_k1{0.0, 0.0};     // sum_{j=1}^{k}   F_{k+1-j} a_j
        for (std::size_t j = 1; j < k; ++j) hist_k += f_at(k - j) * series.values[j];
        for (std::size_t j = 1; j <= k; ++j) hist_k1 += f_at(k + 1 - j) * series.values[j];

        const std::complex<double> integral_k =
            k == 0 ? std::complex<double>{0.0, 0.0}
                   : h * (0.5 * f_at(k) * series.values[0] + hist_k + 0.5 * f0 * a_k);
        const std::complex<double> deriv_k = minus_i * (e_e * a_k + integral_k);

        // predictor (Euler) then one trapezoidal corrector pass
        const std::complex<double> a_pred = a_k + h * deriv_k;
        const std::complex<double> integral_pred =
            h * (0.5 * f_at(k + 1) * series.values[0] + hist_k1 + 0.5 * f0 * a_pred);
        const std::complex<double> deriv_pred = minus_i * (e_e * a_pred + integral_pred);

        const std::complex<double> a_next = a_k + 0.5 * h * (deriv_k + deriv_pred);
        series.values[k + 1] = a_next;

        if (std::abs(a_next) > kBlowupTol) {
            std::ostringstream msg;
            msg << "volterra_amplitude: |a| = " << std::abs(a_next) << " > " << kBlowupTol
                << " at step " << k + 1 << " (t = " << h * static_cast<double>(k + 1)
                << "); the scheme is unstable at this step size";
            throw StabilityError(msg.str());
        }
    }
    return series;
}

}  // namespace nmqt
