#ifndef NMQT_MEMORY_KERNEL_HPP
#define NMQT_MEMORY_KERNEL_HPP

#include <complex>
#include <vector>

#include "nmqt/params.hpp"
#include "nmqt/spectral.hpp"

namespace nmqt {

/// Time-domain self-energy kernel F(s_k) on a uniform grid s_k = k*h.
struct MemoryKernel {
    TimeGrid grid;
    std::vector<std::complex<double>> values;
};

/// F(s) = -i * integral dw D(w) e^{-i(w + e_g) s}.
///
/// Lorentzian spectra use the closed form
///   F(s) = -i (gamma*lambda/2) e^{-i(omega0 + e_g) s} e^{-lambda s},  s >= 0.
/// Tabulated spectra are integrated by the trapezoidal rule over the table
/// range; the sampling must resolve the fastest phase at the largest lag
/// (max domega * s_max < pi/4), otherwise a ResolutionError is thrown.
MemoryKernel memory_kernel(const SpectralDensity& sdf, double e_g, const TimeGrid& grid);

}  // namespace nmqt

#endif
