#ifndef NMQT_SPECTRAL_HPP
#define NMQT_SPECTRAL_HPP

#include <variant>
#include <vector>

namespace nmqt {

/// Lorentzian environment spectrum
///   D(w) = d0 * lambda^2 / ((w - omega0)^2 + lambda^2),
/// with spectral height d0, center omega0 and half-width lambda.
/// The wide-band decay rate is gamma = 2*pi*d0.
struct LorentzianSdf {
    double d0 = 0.0;
    double omega0 = 0.0;
    double lambda = 0.0;

    double gamma() const;
};

/// Spectrum sampled on a strictly increasing frequency grid; treated as zero
/// outside the tabulated range.
struct TabulatedSdf {
    std::vector<double> omega;
    std::vector<double> density;
};

using SpectralDensity = std::variant<LorentzianSdf, TabulatedSdf>;

/// d0 > 0, lambda > 0; throws std::invalid_argument otherwise.
LorentzianSdf make_lorentzian(double d0, double omega0, double lambda);

/// Lorentzian with a prescribed wide-band rate gamma: d0 = gamma / (2*pi).
LorentzianSdf lorentzian_from_gamma(double gamma, double omega0, double lambda);

/// Strictly increasing omega, density >= 0 everywhere, at least 2 samples.
TabulatedSdf make_tabulated(std::vector<double> omega, std::vector<double> density);

/// True when the symmetric-Lorentzian model is questionable for frequent
/// measurements (spectral center less than 5 half-widths above zero).  The
/// model itself assumes delta_eg > omega0 >> lambda; callers decide whether
/// to warn.
bool zeno_regime_advisory(const LorentzianSdf& sdf);

}  // namespace nmqt

#endif
