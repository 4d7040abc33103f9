#include "nmqt/zeno.hpp"

#include <cmath>

namespace nmqt {

namespace {

// (1 - K tau^2)^n, accurate for small K tau^2 and large n
double survival_factor(const ZenoParams& p) {
    const double kt2 = p.k_coupling * p.tau * p.tau;
    if (p.n == 0 || kt2 == 0.0) return 1.0;
    return std::exp(static_cast<double>(p.n) * std::log1p(-kt2));
}

}  // namespace

ZenoResult zeno_sequence(const ZenoParams& params, std::complex<double> alpha0,
                         std::complex<double> beta0) {
    const double kt2 = params.k_coupling * params.tau * params.tau;
    const double f = survival_factor(params);
    const std::complex<double> alpha = alpha0 * f;
    const double norm = std::sqrt(std::norm(alpha) + std::norm(beta0));
    return {PureState{alpha / norm, beta0 / norm}, kt2 >= 0.01};
}

double zeno_survival_fidelity(const ZenoParams& params, std::complex<double> alpha0,
                              std::complex<double> beta0) {
    const double f = survival_factor(params);
    const double overlap = f * std::norm(alpha0) + std::norm(beta0);
    return overlap * overlap;
}

}  // namespace nmqt
