#include "nmqt/spectral.hpp"

#include <numbers>
#include <stdexcept>
#include <utility>

namespace nmqt {

double LorentzianSdf::gamma() const { return 2.0 * std::numbers::pi * d0; }

LorentzianSdf make_lorentzian(double d0, double omega0, double lambda) {
    if (!(d0 > 0.0)) throw std::invalid_argument("LorentzianSdf: d0 must be > 0");
    if (!(lambda > 0.0)) throw std::invalid_argument("LorentzianSdf: lambda must be > 0");
    return {d0, omega0, lambda};
}

LorentzianSdf lorentzian_from_gamma(double gamma, double omega0, double lambda) {
    if (!(gamma > 0.0)) throw std::invalid_argument("LorentzianSdf: gamma must be > 0");
    return make_lorentzian(gamma / (2.0 * std::numbers::pi), omega0, lambda);
}

TabulatedSdf make_tabulated(std::vector<double> omega, std::vector<double> density) {
    if (omega.size() != density.size())
        throw std::invalid_argument("TabulatedSdf: omega/density size mismatch");
    if (omega.size() < 2)
        throw std::invalid_argument("TabulatedSdf: need at least 2 samples");
    for (std::size_t i = 1; i < omega.size(); ++i)
        if (!(omega[i] > omega[i - 1]))
            throw std::invalid_argument("TabulatedSdf: omega grid must be strictly increasing");
    for (double d : density)
        if (!(d >= 0.0))
            throw std::invalid_argument("TabulatedSdf: density must be nonnegative");
    return {std::move(omega), std::move(density)};
}

bool zeno_regime_advisory(const LorentzianSdf& sdf) {
    return sdf.omega0 < 5.0 * sdf.lambda;
}

}  // namespace nmqt
