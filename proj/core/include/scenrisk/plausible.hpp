#ifndef SCENRISK_PLAUSIBLE_HPP
#define SCENRISK_PLAUSIBLE_HPP

#include <vector>

#include "scenrisk/rng.hpp"
#include "scenrisk/types.hpp"

namespace scenrisk::plausible {

/// Gaussian corruption applied when reconstructing a corrected scene.
struct NoiseModel {
  double pos_std = 0.2;      // meters, per axis
  double heading_std = 0.1;  // radians
  double speed_std = 0.1;    // m/s
};

/// Draw one corrected world-state hypothesis for the given active faults:
/// re-insert missing obstacles, delete ghosts, restore misdetected fields,
/// flip misreported lights, and re-localize the ego — each restored from the
/// diagnostic `truth_hint` plus Gaussian noise. Fields not named by any
/// fault are copied from the perceived scene verbatim.
///
/// Throws std::invalid_argument when `faults` is empty (the monitor only
/// runs on detected failures) or when a fault references an unknown target.
WorldState generate_plausible(const WorldHistory& perceived,
                              const std::vector<FaultSpec>& faults,
                              const WorldState& truth_hint, const NoiseModel& noise,
                              RandomStream& stream);

}  // namespace scenrisk::plausible

#endif  // SCENRISK_PLAUSIBLE_HPP
