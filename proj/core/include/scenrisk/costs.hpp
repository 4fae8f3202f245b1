#ifndef SCENRISK_COSTS_HPP
#define SCENRISK_COSTS_HPP

#include "scenrisk/types.hpp"

namespace scenrisk::costs {

enum class CostMetric { Ttc, Msd };

struct CostConfig {
  CostMetric metric = CostMetric::Msd;
  double ttc_cap = 3.0;  // seconds; time-to-collision saturates here
  double weight_vehicle = 0.5;
  double weight_pedestrian = 1.0;
  double weight_bicycle = 1.0;
  /// Use the growing-exponential variant max_a exp(+w * delta / 2) instead
  /// of the default decaying form. Kept for fidelity experiments only.
  bool msd_literal_formula = false;
  double rule_penalty = 1.0;  // additive penalty per active traffic-rule violation

  double weight(AgentKind kind) const {
    switch (kind) {
      case AgentKind::Vehicle: return weight_vehicle;
      case AgentKind::Pedestrian: return weight_pedestrian;
      case AgentKind::Bicycle: return weight_bicycle;
    }
    return weight_vehicle;
  }
};

/// Time until the circumscribed discs of the two footprints touch, assuming
/// both hold heading and speed: smallest t >= 0 with |r + w t| = R_sum.
/// Returns 0 when already overlapping and +infinity when never closing.
double ttc_pair(const AgentState& ego, const AgentState& agent);

/// Rotate a vector into the frame of a given heading:
/// (component along the heading, component perpendicular to it).
std::pair<double, double> decompose(const Vec2& v, double heading);

/// Count of active traffic-rule violations by the ego:
/// driving against its matched lane's direction (or > 10 m off every lane),
/// and crossing a red light's stop point with positive speed.
int rule_violations(const WorldState& world);

/// Surrogate collision-time cost: nu_total + max over agents of
/// (1 - min{ttc/cap, 1}). In [0, 1] when no rules are violated.
double ttc_cost(const WorldState& world, const CostConfig& cfg);

/// Momentum-shaped distance cost: nu_total + max over agents of
/// w_kind * exp(-delta/2), where delta couples ego-frame position and
/// velocity differences. Peaks when an agent is both near and slow-moving
/// relative to the ego.
double msd_cost(const WorldState& world, const CostConfig& cfg);

/// Dispatch on cfg.metric.
double scene_cost(const WorldState& world, const CostConfig& cfg);

}  // namespace scenrisk::costs

#endif  // SCENRISK_COSTS_HPP
