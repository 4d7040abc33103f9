#ifndef NMQT_AMPLITUDE_HPP
#define NMQT_AMPLITUDE_HPP

#include <complex>
#include <vector>

#include "nmqt/params.hpp"

namespace nmqt {

/// Survival amplitude of the excited state under a Lorentzian spectrum,
///   a(t) = (A+ e^{-A- t} - A- e^{-A+ t}) / (A+ - A-),
///   A+- = [lambda - iE +- sqrt((lambda - iE)^2 - 2*gamma*lambda)] / 2.
/// The principal square root is used; the expression is symmetric under
/// A+ <-> A-, so the branch does not matter.  Near-degenerate roots
/// (|A+ - A-| < 1e-8 * max|A+-|) switch to the confluent limit
/// (1 + A t) e^{-A t} with A = (lambda - iE)/2.
std::complex<double> amplitude_lorentzian(double t, double lambda, double gamma, double e);

/// abar = a(tau)^n, accumulated as exp(n * log a(tau)) with the principal
/// log branch (adequate for x = lambda*tau below ~pi, where a(tau) stays
/// away from the negative real axis).
std::complex<double> survival_repeated(double tau, long n, double lambda,
                                       double gamma, double e);

/// B(x; kappa) = 1/kappa - (1 - e^{-kappa x}) / (kappa^2 x); the decay
/// exponent bracket shared by the scaled amplitude and the effective rate.
/// Evaluated by series for |kappa x| < 1/2 to avoid cancellation.
std::complex<double> decay_bracket(std::complex<double> kappa, double x);

/// Scaling-limit survival amplitude abar(t) = exp(-B * gamma * t / 2).
std::complex<double> amplitude_scaled(double t, const ScalingParams& scaling);

/// Measurement-frequency-dependent decay rate gamma_eff = gamma * Re B.
double effective_rate_scaled(const ScalingParams& scaling);

enum class RateFlavor { linear, log };

/// Empirical rate from a coarse-step survival amplitude:
///   linear: (1 - |abar|^2) / dt      log: -ln(|abar|^2) / dt.
/// Both converge to effective_rate_scaled as dt -> 0.  The log flavor is
/// undefined at |abar| = 0 (DomainError).
double effective_rate_empirical(std::complex<double> abar, double dt, RateFlavor flavor);

/// Joint probability of n null results from the initial state
/// alpha0|e> + beta0|g>:  p0 = |abar * alpha0|^2 + |beta0|^2.
/// Requires |alpha0|^2 + |beta0|^2 = 1 within 1e-9.
double null_probability(std::complex<double> abar, std::complex<double> alpha0,
                        std::complex<double> beta0);

/// Amplitude samples on a uniform grid; values[0] = 1 for every solver.
struct AmplitudeSeries {
    TimeGrid grid;
    std::vector<std::complex<double>> values;
};

}  // namespace nmqt

#endif
