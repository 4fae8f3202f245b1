#ifndef SCENRISK_FAULTS_HPP
#define SCENRISK_FAULTS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "scenrisk/rng.hpp"
#include "scenrisk/types.hpp"

namespace scenrisk::faults {

/// Time intervals [t_on, t_off) during which a fault is present.
struct FaultSchedule {
  std::vector<std::pair<double, double>> intervals;

  bool active_at(double t) const {
    for (const auto& [on, off] : intervals)
      if (t >= on && t < off) return true;
    return false;
  }
};

/// Activation probability per second of simulated time for dynamic faults.
inline constexpr double kDynamicRatePerSecond = 0.25;
/// Minimum time a dynamic fault stays active once triggered.
inline constexpr double kMinActiveSeconds = 1.0;

/// Static faults cover [0, duration); dynamic faults switch on with
/// per-step probability rate*dt, stay on at least one second, then switch
/// off with the same per-step probability. `rate` is overridable for tests.
FaultSchedule schedule_faults(const FaultSpec& spec, double duration, double dt,
                              RandomStream& stream,
                              double rate = kDynamicRatePerSecond);

/// The concrete perturbation a fault applies while active. Drawn once per
/// activation so the corrupted stream is coherent over time (a ghost stays
/// where it appeared; an orientation offset does not jitter per frame).
struct Perturbation {
  double delta = 0.0;              // heading offset, speed offset, or size scale
  Vec2 position_offset;            // mislocalization translation
  double heading_offset = 0.0;     // mislocalization rotation
  std::optional<AgentState> ghost;  // fabricated agent for ghost faults
};

/// Sample the perturbation for one activation of `spec` against the current
/// truth (ghost placement is relative to the ego's route).
Perturbation draw_perturbation(const WorldState& truth, const FaultSpec& spec,
                               RandomStream& stream);

/// Apply a drawn perturbation: returns the corrupted perceived state.
/// Never mutates the truth. Throws on an unknown target.
WorldState apply_perturbation(const WorldState& truth, const FaultSpec& spec,
                              const Perturbation& pert);

struct InjectResult {
  WorldState perceived;
  /// Ground-truth snapshot standing in for the diagnostic output of a
  /// failure-identification module; empty while the fault is inactive.
  std::optional<WorldState> truth_hint;
};

/// One-shot injection: when active, draws a fresh perturbation and applies
/// it; when inactive, the perceived state equals the truth.
InjectResult inject(const WorldState& truth, const FaultSpec& spec, bool active,
                    RandomStream& stream);

/// Stateful per-scenario injector: owns the schedules and keeps each
/// fault's perturbation fixed across the steps of one activation interval.
class FaultInjector {
 public:
  FaultInjector(std::vector<FaultSpec> specs, double duration, double dt,
                std::uint64_t seed);

  struct StepResult {
    WorldState perceived;
    std::vector<FaultSpec> active;  // the currently active fault specs
  };

  /// Corrupt the truth snapshot at time truth.time.
  StepResult step(const WorldState& truth);

  const std::vector<FaultSchedule>& schedules() const { return schedules_; }

 private:
  std::vector<FaultSpec> specs_;
  std::vector<FaultSchedule> schedules_;
  std::vector<std::optional<Perturbation>> current_;  // per fault, while active
  std::vector<std::uint64_t> activation_count_;
  RandomStream root_;
};

}  // namespace scenrisk::faults

#endif  // SCENRISK_FAULTS_HPP
