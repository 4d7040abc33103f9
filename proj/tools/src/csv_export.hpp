#ifndef NMQT_CLI_CSV_EXPORT_HPP
#define NMQT_CLI_CSV_EXPORT_HPP

#include <string>

#include "nmqt/amplitude.hpp"
#include "nmqt/memory_kernel.hpp"

namespace nmqt::cli {

/// Kernel samples in the tool's CSV dialect:
/// columns s, re_f, im_f, abs_f under a '#' version header.
std::string kernel_csv(const nmqt::MemoryKernel& kernel);

/// Amplitude samples: columns t, re_a, im_a, abs_a.
std::string amplitude_series_csv(const nmqt::AmplitudeSeries& series);

}  // namespace nmqt::cli

#endif
