#ifndef NMQT_VOLTERRA_HPP
#define NMQT_VOLTERRA_HPP

#include "nmqt/amplitude.hpp"
#include "nmqt/memory_kernel.hpp"

namespace nmqt {

/// Integrates the memory-kernel amplitude equation
///   i da/dt = e_e a(t) + integral_0^t F(t - t') a(t') dt',   a(0) = 1,
/// with trapezoidal history quadrature and one predictor-corrector pass per
/// step (global order h^2).  The returned amplitude keeps the free phase:
/// for F == 0 it is exactly e^{-i e_e t}.
///
/// The kernel spacing must equal or evenly divide grid.h and the kernel must
/// cover the full horizon (GridError).  Integration aborts with a
/// StabilityError if |a| exceeds 1.01.
AmplitudeSeries volterra_amplitude(const MemoryKernel& kernel, double e_e,
                                   const TimeGrid& grid);

}  // namespace nmqt

#endif
