#include "scenrisk/types.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace scenrisk {

FaultParams default_fault_params(FaultMode mode) {
  constexpr double pi = 3.141592653589793238462643383279502884;
  switch (mode) {
    case FaultMode::MisdetectOrientation:
      return {pi / 6.0, 0.1};  // heading offset, radians
    case FaultMode::MisdetectSize:
      return {1.5, 0.1};  // uniform scale factor on both extents
    case FaultMode::MisdetectVelocity:
      return {2.0, 0.5};  // speed offset, m/s
    case FaultMode::Mislocalization:
      return {1.0, 0.2};  // per-axis position offset, meters
    case FaultMode::MisdetectTrafficLight:
    case FaultMode::GhostObstacle:
    case FaultMode::MissingObstacle:
      return {0.0, 0.0};  // discrete modes need no noise parameters
  }
  return {0.0, 0.0};
}

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_agent(const AgentState& a, const std::string& label,
                 std::vector<std::string>& out) {
  std::ostringstream who;
  who << label << " " << a.id;
  if (!(a.extent.x > 0.0) || !(a.extent.y > 0.0))
    out.push_back(who.str() + ": extent must be positive");
  if (!(a.speed >= 0.0)) out.push_back(who.str() + ": speed must be non-negative");
  if (!(a.heading > -kPi) || !(a.heading <= kPi))
    out.push_back(who.str() + ": heading must lie in (-pi, pi]");
  if (!std::isfinite(a.position.x) || !std::isfinite(a.position.y))
    out.push_back(who.str() + ": position must be finite");
}

}  // namespace

std::vector<std::string> validate_scenario(const ScenarioSpec& spec) {
  std::vector<std::string> out;
  if (!spec.map) {
    out.push_back("scenario: missing map");
    return out;
  }
  const MapContext& map = *spec.map;

  for (std::size_t i = 0; i < map.lanes.size(); ++i) {
    const Lane& l = map.lanes[i];
    std::ostringstream who;
    who << "lane " << l.id;
    if (l.centerline.size() < 2) out.push_back(who.str() + ": centerline needs >= 2 points");
    if (!(l.speed_limit > 0.0)) out.push_back(who.str() + ": speed_limit must be positive");
  }
  for (const TrafficLight& t : map.traffic_lights) {
    std::ostringstream who;
    who << "light " << t.id;
    const Lane* lane = map.find_lane(t.lane);
    if (!lane) {
      out.push_back(who.str() + ": unknown lane");
    } else if (lane->centerline.size() >= 2) {
      const double len = Polyline(lane->centerline).length();
      if (t.stop_s < 0.0 || t.stop_s > len)
        out.push_back(who.str() + ": stop point outside lane extent");
    }
  }

  check_agent(spec.initial.ego, "ego", out);
  if (spec.initial.ego.route.empty()) out.push_back("ego: route must be non-empty");
  for (LaneId lid : spec.initial.ego.route)
    if (!map.find_lane(lid)) {
      std::ostringstream msg;
      msg << "ego: route references unknown lane " << lid;
      out.push_back(msg.str());
    }

  std::set<AgentId> ids;
  for (const AgentState& a : spec.initial.agents) {
    check_agent(a, "agent", out);
    if (!ids.insert(a.id).second) {
      std::ostringstream msg;
      msg << "agent " << a.id << ": duplicate id";
      out.push_back(msg.str());
    }
  }

  for (const AgentPolicy& p : spec.policies) {
    if (!ids.count(p.agent)) {
      std::ostringstream msg;
      msg << "policy for agent " << p.agent << ": unknown agent";
      out.push_back(msg.str());
    }
  }

  for (std::size_t i = 0; i < spec.faults.size(); ++i) {
    const FaultSpec& f = spec.faults[i];
    std::ostringstream who;
    who << "fault " << i;
    const bool needs_agent_target =
        f.mode == FaultMode::MisdetectOrientation || f.mode == FaultMode::MisdetectSize ||
        f.mode == FaultMode::MisdetectVelocity || f.mode == FaultMode::MissingObstacle;
    if ((f.mode == FaultMode::GhostObstacle || f.mode == FaultMode::MissingObstacle) &&
        f.subtype == FaultSubtype::None)
      out.push_back(who.str() + ": ghost/missing require an in-path/not-in-path subtype");
    if (needs_agent_target) {
      if (!f.target)
        out.push_back(who.str() + ": missing target");
      else if (!ids.count(*f.target))
        out.push_back(who.str() + ": unknown target");
    }
    if (f.mode == FaultMode::GhostObstacle) {
      if (!f.target)
        out.push_back(who.str() + ": missing target");
      else if (ids.count(*f.target))
        out.push_back(who.str() + ": ghost target id collides with an existing agent");
    }
    if (f.mode == FaultMode::MisdetectTrafficLight) {
      if (!f.target)
        out.push_back(who.str() + ": missing target");
      else if (!map.find_light(*f.target))
        out.push_back(who.str() + ": unknown target");
    }
    if (f.params && f.params->std < 0.0)
      out.push_back(who.str() + ": negative noise std");
  }

  if (!(spec.dt > 0.0)) out.push_back("scenario: dt must be positive");
  if (!(spec.duration > 0.0)) out.push_back("scenario: duration must be positive");
  if (spec.dt > 0.0 && spec.duration > 0.0) {
    const double steps = spec.duration / spec.dt;
    if (std::abs(steps - std::round(steps)) > 1e-9)
      out.push_back("scenario: duration must be an integer multiple of dt");
  }
  if (spec.initial.map && spec.map && !(spec.initial.map == spec.map) &&
      !(*spec.initial.map == *spec.map))
    out.push_back("scenario: initial state map differs from scenario map");

  return out;
}

}  // namespace scenrisk
