#ifndef NMQT_ERRORS_HPP
#define NMQT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nmqt {

/// Time-grid incompatibility (spacing mismatch, kernel too short, ...).
struct GridError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A quadrature grid cannot resolve the requested oscillation.
struct ResolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An integrator left its stability domain (|a| blew up, ...).
struct StabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A step-size guard was violated (rate * dt too large, p >= 1, ...).
struct StepSizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mathematically undefined request (log of zero amplitude, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A trajectory inside an ensemble failed; carries the failing index and seed.
struct TrajectoryError : std::runtime_error {
    TrajectoryError(const std::string& what, long index, std::uint64_t seed)
        : std::runtime_error(what), index(index), seed(seed) {}
    long index;
    std::uint64_t seed;
};

}  // namespace nmqt

#endif
