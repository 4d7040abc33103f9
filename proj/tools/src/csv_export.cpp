#include "csv_export.hpp"

#include <complex>
#include <sstream>

#include "config.hpp"
#include "version.hpp"

namespace nmqt::cli {

namespace {

std::string series_csv(const char* axis, double h, const char* stem,
                       const std::vector<std::complex<double>>& values) {
    std::ostringstream out;
    out << "# nmqt " << kVersion << "\n";
    out << axis << ",re_" << stem << ",im_" << stem << ",abs_" << stem << "\n";
    for (std::size_t k = 0; k < values.size(); ++k) {
        out << fmt_double(h * static_cast<double>(k)) << ','
            << fmt_double(std::real(values[k])) << ',' << fmt_double(std::imag(values[k]))
            << ',' << fmt_double(std::abs(values[k])) << "\n";
    }
    return out.str();
}

}  // namespace

std::string kernel_csv(const nmqt::MemoryKernel& kernel) {
    return series_csv("s", kernel.grid.h, "f", kernel.values);
}

std::string amplitude_series_csv(const nmqt::AmplitudeSeries& series) {
    return series_csv("t", series.grid.h, "a", series.values);
}

}  // namespace nmqt::cli
