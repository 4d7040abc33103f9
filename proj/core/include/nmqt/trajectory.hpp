#ifndef NMQT_TRAJECTORY_HPP
#define NMQT_TRAJECTORY_HPP

#include <cstdint>
#include <vector>

#include "nmqt/state.hpp"

namespace nmqt {

enum class TrajectoryKind { mcwf, homodyne };

/// One stochastic realization: states at grid times plus per-interval events
/// (jump flags for mcwf, current samples for homodyne).  times and the state
/// series have steps+1 entries; the event series has steps entries, event k
/// belonging to the interval (t_k, t_{k+1}].
struct TrajectoryRecord {
    TrajectoryKind kind = TrajectoryKind::mcwf;
    std::uint64_t seed = 0;

    std::vector<double> times;
    std::vector<PureState> pure;       // mcwf only
    std::vector<DensityMatrix> rho;    // homodyne only
    std::vector<std::uint8_t> jumps;   // mcwf only
    std::vector<double> current;       // homodyne only
    long clamp_count = 0;              // homodyne positivity repairs
};

}  // namespace nmqt

#endif
