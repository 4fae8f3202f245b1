#ifndef SCENRISK_SIM_HPP
#define SCENRISK_SIM_HPP

#include <optional>
#include <vector>

#include "scenrisk/costs.hpp"
#include "scenrisk/faults.hpp"
#include "scenrisk/plausible.hpp"
#include "scenrisk/predict.hpp"
#include "scenrisk/risk.hpp"
#include "scenrisk/types.hpp"

namespace scenrisk::sim {

struct IdmParams {
  double desired_speed = 13.0;  // m/s; planners override with the lane limit
  double time_headway = 1.5;    // s
  double max_accel = 1.0;       // m/s^2
  double comfort_decel = 1.5;   // m/s^2
  double min_gap = 2.0;         // m
  double exponent = 4.0;
};

/// Intelligent-Driver-Model acceleration for a follower at `speed` with a
/// leader `gap` meters ahead moving at `lead_speed`. Clamped to
/// [-2*comfort_decel, max_accel]; a non-positive gap returns the emergency
/// clamp directly.
double idm_accel(double gap, double speed, double lead_speed, const IdmParams& params);

/// Roll the ego forward T steps along its route: IDM longitudinally against
/// the nearest in-lane leader and any red light on the route, pure-pursuit
/// steering toward the route centerline. Holds pose once the route ends.
EgoPlan plan_ego(const WorldState& world, const IdmParams& params, int T, double dt);

/// Oriented-rectangle overlap; touching counts as collision.
inline bool collision(const Footprint& a, const Footprint& b) {
  return rectangles_overlap(a, b);
}

/// Everything the monitor needs at each step.
struct MonitorConfig {
  stats::DetectorParams detector;
  costs::CostConfig cost;
  predict::PredictorConfig predictor;
  plausible::NoiseModel noise;
  IdmParams idm;
  bool run_rsr = true;       // copula-bound detector
  bool run_baseline = false;  // collision-probability detector
};

struct AlarmRecord {
  double time = 0.0;  // simulation time of the alarm
  int tau = 0;        // lookahead step that triggered
  double lower = 0.0;
  double upper = 1.0;
};

struct StepBounds {
  double lower = 0.0;
  double upper = 1.0;
};

struct SimStep {
  double time = 0.0;
  WorldState truth;
  WorldState perceived;
  std::vector<std::size_t> active_faults;  // indices into spec.faults
  EgoPlan ego_plan;                        // truth plan executed this step
  bool collision = false;
};

struct SimLog {
  std::vector<SimStep> steps;
  std::optional<double> first_collision_time;
  std::vector<AlarmRecord> alarms;       // risk-bound detector
  std::vector<double> baseline_alarms;   // collision-probability detector
  /// Per-step risk bounds at the most critical lookahead; (0, 1) while the
  /// monitor is idle.
  std::vector<StepBounds> bounds;

  std::optional<double> first_alarm_time() const {
    if (alarms.empty()) return std::nullopt;
    return alarms.front().time;
  }
  std::optional<double> first_baseline_alarm_time() const {
    if (baseline_alarms.empty()) return std::nullopt;
    return baseline_alarms.front();
  }
};

/// Closed-loop run: truth dynamics (IDM ego and vehicles, replayed others)
/// are advanced independently of faults; the fault injector derives the
/// perceived stream; when any fault is active the monitor compares the
/// perceived and corrected scenes at every lookahead step and records
/// alarms. Bit-reproducible for a fixed (spec, config, seed).
SimLog run_scenario(const ScenarioSpec& spec, const MonitorConfig& config,
                    std::uint64_t seed);

}  // namespace scenrisk::sim

#endif  // SCENRISK_SIM_HPP
