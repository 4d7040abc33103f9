#include "nmqt/amplitude.hpp"

#include <cmath>
#include <stdexcept>

#include "nmqt/errors.hpp"

namespace nmqt {

namespace {
constexpr double kDegenerateRootTol = 1e-8;
constexpr double kBracketSeriesRadius = 0.5;
constexpr double kNormTol = 1e-9;
}  // namespace

std::complex<double> amplitude_lorentzian(double t, double lambda, double gamma, double e) {
    if (!(t >= 0.0)) throw std::invalid_argument("amplitude_lorentzian: t must be >= 0");
    if (!(lambda > 0.0)) throw std::invalid_argument("amplitude_lorentzian: lambda must be > 0");
    if (!(gamma > 0.0)) throw std::invalid_argument("amplitude_lorentzian: gamma must be > 0");

    const std::complex<double> w{lambda, -e};  // Lambda - iE
    const std::complex<double> disc = std::sqrt(w * w - 2.0 * gamma * lambda);
    const std::complex<double> a_plus = 0.5 * (w + disc);
    const std::complex<double> a_minus = 0.5 * (w - disc);

    const double scale = std::max(std::abs(a_plus), std::abs(a_minus));
    if (std::abs(disc) < kDegenerateRootTol * scale) {
        // confluent limit: a(t) = (1 + A t) e^{-A t}, A = (Lambda - iE)/2
        const std::complex<double> a_mid = 0.5 * w;
        return (1.0 + a_mid * t) * std::exp(-a_mid * t);
    }
    return (a_plus * std::exp(-a_minus * t) - a_minus * std::exp(-a_plus * t)) / disc;
}

std::complex<double> survival_repeated(double tau, long n, double lambda,
                                       double gamma, double e) {
    if (!(tau > 0.0)) throw std::invalid_argument("survival_repeated: tau must be > 0");
    if (n < 1) throw std::invalid_argument("survival_repeated: n must be >= 1");

    const std::complex<double> a = amplitude_lorentzian(tau, lambda, gamma, e);
    if (n == 1) return a;
    if (std::abs(a) == 0.0) return {0.0, 0.0};
    return std::exp(static_cast<double>(n) * std::log(a));
}

std::complex<double> decay_bracket(std::complex<double> kappa, double x) {
    if (!(x > 0.0)) throw std::invalid_argument("decay_bracket: x must be > 0");
    const std::complex<double> z = kappa * x;
    if (std::abs(z) < kBracketSeriesRadius) {
        // phi(z) = 1 - (1 - e^{-z})/z = sum_{k>=1} (-1)^{k-1} z^k / (k+1)!
        std::complex<double> term = z / 2.0;
        std::complex<double> sum = term;
        for (int k = 2; k <= 24; ++k) {
            term *= -z / static_cast<double>(k + 1);
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum / kappa;
    }
    return (1.0 - (1.0 - std::exp(-z)) / z) / kappa;
}

std::complex<double> amplitude_scaled(double t, const ScalingParams& scaling) {
    if (!(t >= 0.0)) throw std::invalid_argument("amplitude_scaled: t must be >= 0");
    const std::complex<double> bracket = decay_bracket(scaling.kappa, scaling.x);
    return std::exp(-bracket * (0.5 * scaling.gamma * t));
}

double effective_rate_scaled(const ScalingParams& scaling) {
    return scaling.gamma * std::real(decay_bracket(scaling.kappa, scaling.x));
}

double effective_rate_empirical(std::complex<double> abar, double dt, RateFlavor flavor) {
    if (!(dt > 0.0)) throw std::invalid_argument("effective_rate_empirical: dt must be > 0");
    const double m2 = std::norm(abar);
    if (!(m2 <= 1.0 + 1e-12))
        throw std::invalid_argument("effective_rate_empirical: |abar| must be <= 1");
    if (flavor == RateFlavor::linear) return (1.0 - m2) / dt;
    if (m2 == 0.0)
        throw DomainError("effective_rate_empirical: log flavor undefined at |abar| = 0");
    return -std::log(m2) / dt;
}

double null_probability(std::complex<double> abar, std::complex<double> alpha0,
                        std::complex<double> beta0) {
    const double norm = std::norm(alpha0) + std::norm(beta0);
    if (std::abs(norm - 1.0) > kNormTol)
        throw std::invalid_argument("null_probability: input state must be normalized");
    return std::norm(abar * alpha0) + std::norm(beta0);
}

}  // namespace nmqt
