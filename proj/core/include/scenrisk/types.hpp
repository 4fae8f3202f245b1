#ifndef SCENRISK_TYPES_HPP
#define SCENRISK_TYPES_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scenrisk/geometry.hpp"

namespace scenrisk {

using AgentId = std::int64_t;
using LaneId = std::int64_t;
using LightId = std::int64_t;

enum class AgentKind { Vehicle, Pedestrian, Bicycle };

enum class LightState { Red, Green };

struct AgentState {
  AgentId id = 0;
  AgentKind kind = AgentKind::Vehicle;
  Vec2 position;
  double heading = 0.0;  // radians in (-pi, pi]
  double speed = 0.0;    // m/s, >= 0
  Vec2 extent{2.0, 1.0};  // half-length, half-width in meters, > 0

  Vec2 velocity() const { return unit_from_heading(heading) * speed; }
  Footprint footprint() const { return {position, heading, extent.x, extent.y}; }

  bool operator==(const AgentState&) const = default;
};

struct EgoState : AgentState {
  std::vector<LaneId> route;  // ordered lane ids to follow

  bool operator==(const EgoState&) const = default;
};

struct Lane {
  LaneId id = 0;
  std::vector<Vec2> centerline;
  double speed_limit = 13.0;  // m/s
  bool forward = true;        // legal travel is along increasing arc length

  bool operator==(const Lane&) const = default;
};

struct TrafficLight {
  LightId id = 0;
  LaneId lane = 0;
  double stop_s = 0.0;  // arc position of the stop point on the lane
  LightState state = LightState::Green;

  bool operator==(const TrafficLight&) const = default;
};

struct MapContext {
  std::vector<Lane> lanes;
  std::vector<TrafficLight> traffic_lights;

  const Lane* find_lane(LaneId id) const {
    for (const Lane& l : lanes)
      if (l.id == id) return &l;
    return nullptr;
  }
  const TrafficLight* find_light(LightId id) const {
    for (const TrafficLight& t : traffic_lights)
      if (t.id == id) return &t;
    return nullptr;
  }

  bool operator==(const MapContext&) const = default;
};

/// One snapshot of the world. The map is shared (immutable) between
/// snapshots; a state that needs a modified map (e.g. a flipped light)
/// holds its own copy.
struct WorldState {
  double time = 0.0;
  EgoState ego;
  std::vector<AgentState> agents;
  std::shared_ptr<const MapContext> map;

  const AgentState* find_agent(AgentId id) const {
    for (const AgentState& a : agents)
      if (a.id == id) return &a;
    return nullptr;
  }
  AgentState* find_agent(AgentId id) {
    for (AgentState& a : agents)
      if (a.id == id) return &a;
    return nullptr;
  }

  bool operator==(const WorldState& o) const {
    const bool map_eq = (map == o.map) || (map && o.map && *map == *o.map);
    return map_eq && time == o.time && ego == o.ego && agents == o.agents;
  }
};

/// Time-ordered world snapshots with a fixed step.
struct WorldHistory {
  double dt = 0.1;
  std::vector<WorldState> states;

  const WorldState& current() const { return states.back(); }
};

struct PlanPose {
  Vec2 position;
  double heading = 0.0;
  double speed = 0.0;

  bool operator==(const PlanPose&) const = default;
};

/// Planned ego motion over the prediction horizon, fixed step dt.
struct EgoPlan {
  double dt = 0.1;
  std::vector<PlanPose> poses;

  int horizon() const { return static_cast<int>(poses.size()); }
};

enum class FaultMode {
  MisdetectOrientation,
  MisdetectSize,
  MisdetectVelocity,
  MisdetectTrafficLight,
  GhostObstacle,
  MissingObstacle,
  Mislocalization,
};

enum class FaultSubtype { InPath, NotInPath, None };

enum class FaultTiming { Static, Dynamic };

struct FaultParams {
  double mean = 0.0;
  double std = 0.0;

  bool operator==(const FaultParams&) const = default;
};

/// Default (mean, std) of the injected perturbation per fault mode.
FaultParams default_fault_params(FaultMode mode);

struct FaultSpec {
  FaultMode mode = FaultMode::MissingObstacle;
  FaultSubtype subtype = FaultSubtype::None;
  FaultTiming timing = FaultTiming::Static;
  /// Agent id for obstacle modes (for ghosts: the id the fabricated agent
  /// will take), light id for traffic-light mode, unused for mislocalization.
  std::optional<std::int64_t> target;
  std::optional<FaultParams> params;  // defaulted per mode when absent

  FaultParams effective_params() const {
    return params ? *params : default_fault_params(mode);
  }

  bool operator==(const FaultSpec&) const = default;
};

enum class PolicyKind { Idm, Replay };

/// Motion policy of a non-ego agent. Replay agents follow `trajectory`
/// step-by-step and hold the last pose (an empty trajectory holds the
/// initial pose); IDM agents car-follow along their nearest lane.
struct AgentPolicy {
  AgentId agent = 0;
  PolicyKind kind = PolicyKind::Replay;
  std::vector<PlanPose> trajectory;

  bool operator==(const AgentPolicy&) const = default;
};

struct ScenarioSpec {
  std::string name;
  std::shared_ptr<const MapContext> map;
  WorldState initial;  // initial.map == map
  std::vector<AgentPolicy> policies;
  std::vector<FaultSpec> faults;
  double duration = 20.0;
  double dt = 0.1;

  const AgentPolicy* find_policy(AgentId id) const {
    for (const AgentPolicy& p : policies)
      if (p.agent == id) return &p;
    return nullptr;
  }

  bool operator==(const ScenarioSpec& o) const {
    const bool map_eq = (map == o.map) || (map && o.map && *map == *o.map);
    return map_eq && name == o.name && initial == o.initial &&
           policies == o.policies && faults == o.faults &&
           duration == o.duration && dt == o.dt;
  }
};

/// Check every structural invariant of a scenario; returns one message per
/// violation (empty means valid).
std::vector<std::string> validate_scenario(const ScenarioSpec& spec);

}  // namespace scenrisk

#endif  // SCENRISK_TYPES_HPP
