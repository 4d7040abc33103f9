#ifndef NMQT_ZENO_HPP
#define NMQT_ZENO_HPP

#include <complex>

#include "nmqt/params.hpp"
#include "nmqt/state.hpp"

namespace nmqt {

struct ZenoResult {
    PureState state;
    /// Set when K tau^2 >= 0.01, where the second-order expansion behind the
    /// projection product is no longer trustworthy.
    bool expansion_warning = false;
};

/// Normalized state after n null-result projections at interval tau:
/// excited amplitude scaled by (1 - K tau^2)^n.
ZenoResult zeno_sequence(const ZenoParams& params, std::complex<double> alpha0,
                         std::complex<double> beta0);

/// Squared overlap of the initial state with the unnormalized surviving
/// branch, |f |alpha0|^2 + |beta0|^2|^2 with f = (1 - K tau^2)^n — the joint
/// probability of surviving all n checks unchanged.  Its deviation from 1
/// scales linearly in tau at fixed t = n*tau.
double zeno_survival_fidelity(const ZenoParams& params, std::complex<double> alpha0,
                              std::complex<double> beta0);

}  // namespace nmqt

#endif
