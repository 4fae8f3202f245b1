#include "scenrisk/faults.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace scenrisk::faults {

namespace {

constexpr std::uint64_t kScheduleSalt = 0x5C4ED00000000003ULL;
constexpr std::uint64_t kPerturbSalt = 0xFA1700000000004ULL;
constexpr double kGhostAheadMin = 8.0;   // meters ahead of the ego
constexpr double kGhostAheadMax = 25.0;
constexpr double kOffRouteMin = 6.0;     // lateral meters for not-in-path ghosts
constexpr double kOffRouteMax = 12.0;
constexpr double kMislocalizationHeadingStd = 0.05;  // radians

std::invalid_argument unknown_target(const FaultSpec& spec) {
  std::string msg = "inject: fault references unknown target";
  if (spec.target) msg += " " + std::to_string(*spec.target);
  return std::invalid_argument(msg);
}

Polyline ego_route_polyline(const WorldState& world) {
  std::vector<Vec2> pts;
  if (world.map) {
    for (LaneId lid : world.ego.route) {
      const Lane* lane = world.map->find_lane(lid);
      if (!lane) continue;
      for (const Vec2& p : lane->centerline) {
        if (pts.empty() || !(pts.back() == p)) pts.push_back(p);
      }
    }
  }
  if (pts.size() < 2) {
    // Degenerate route: fall back to the ego's own heading ray.
    pts = {world.ego.position, world.ego.position + unit_from_heading(world.ego.heading) * 100.0};
  }
  return Polyline(std::move(pts));
}

}  // namespace

FaultSchedule schedule_faults(const FaultSpec& spec, double duration, double dt,
                              RandomStream& stream, double rate) {
  if (!(duration > 0.0) || !(dt > 0.0))
    throw std::invalid_argument("schedule_faults: duration and dt must be positive");
  FaultSchedule out;
  if (spec.timing == FaultTiming::Static) {
    out.intervals.emplace_back(0.0, duration);
    return out;
  }
  const double p_step = std::clamp(rate * dt, 0.0, 1.0);
  const int steps = static_cast<int>(std::round(duration / dt));
  bool active = false;
  double on_time = 0.0;
  for (int k = 0; k < steps; ++k) {
    const double t = k * dt;
    if (!active) {
      if (p_step > 0.0 && stream.bernoulli(p_step)) {
        active = true;
        on_time = t;
      }
    } else if (t - on_time >= kMinActiveSeconds) {
      if (p_step > 0.0 && stream.bernoulli(p_step)) {
        active = false;
        out.intervals.emplace_back(on_time, t);
      }
    }
  }
  if (active) out.intervals.emplace_back(on_time, duration);
  return out;
}

Perturbation draw_perturbation(const WorldState& truth, const FaultSpec& spec,
                               RandomStream& stream) {
  Perturbation pert;
  const FaultParams params = spec.effective_params();
  switch (spec.mode) {
    case FaultMode::MisdetectOrientation:
    case FaultMode::MisdetectVelocity:
      pert.delta = stream.normal(params.mean, params.std);
      break;
    case FaultMode::MisdetectSize:
      pert.delta = std::max(0.05, stream.normal(params.mean, params.std));
      break;
    case FaultMode::Mislocalization:
      pert.position_offset.x = stream.normal(params.mean, params.std);
      pert.position_offset.y = stream.normal(params.mean, params.std);
      pert.heading_offset = stream.normal(0.0, kMislocalizationHeadingStd);
      break;
    case FaultMode::GhostObstacle: {
      const Polyline route = ego_route_polyline(truth);
      const double s_ego = route.project(truth.ego.position).s;
      const double ahead = stream.uniform(kGhostAheadMin, kGhostAheadMax);
      const double s = std::min(s_ego + ahead, route.length());
      AgentState ghost;
      ghost.id = spec.target.value_or(-1);
      ghost.kind = AgentKind::Vehicle;
      ghost.position = route.point_at(s);
      ghost.heading = route.heading_at(s);
      ghost.speed = 0.0;
      ghost.extent = {2.25, 1.0};
      if (spec.subtype == FaultSubtype::NotInPath) {
        const double side = stream.bernoulli(0.5) ? 1.0 : -1.0;
        const double off = stream.uniform(kOffRouteMin, kOffRouteMax);
        ghost.position += route.normal_at(s) * (side * off);
      }
      pert.ghost = ghost;
      break;
    }
    case FaultMode::MisdetectTrafficLight:
    case FaultMode::MissingObstacle:
      break;  // discrete: nothing to draw
  }
  return pert;
}

WorldState apply_perturbation(const WorldState& truth, const FaultSpec& spec,
                              const Perturbation& pert) {
  WorldState perceived = truth;
  switch (spec.mode) {
    case FaultMode::MisdetectOrientation: {
      if (!spec.target) throw unknown_target(spec);
      AgentState* agent = perceived.find_agent(*spec.target);
      if (!agent) throw unknown_target(spec);
      agent->heading = normalize_heading(agent->heading + pert.delta);
      break;
    }
    case FaultMode::MisdetectSize: {
      if (!spec.target) throw unknown_target(spec);
      AgentState* agent = perceived.find_agent(*spec.target);
      if (!agent) throw unknown_target(spec);
      agent->extent = agent->extent * pert.delta;
      break;
    }
    case FaultMode::MisdetectVelocity: {
      if (!spec.target) throw unknown_target(spec);
      AgentState* agent = perceived.find_agent(*spec.target);
      if (!agent) throw unknown_target(spec);
      agent->speed = std::max(0.0, agent->speed + pert.delta);
      break;
    }
    case FaultMode::MisdetectTrafficLight: {
      if (!spec.target || !perceived.map || !perceived.map->find_light(*spec.target))
        throw unknown_target(spec);
      auto map_copy = std::make_shared<MapContext>(*perceived.map);
      for (TrafficLight& light : map_copy->traffic_lights) {
        if (light.id == *spec.target)
          light.state =
              light.state == LightState::Red ? LightState::Green : LightState::Red;
      }
      perceived.map = std::move(map_copy);
      break;
    }
    case FaultMode::GhostObstacle: {
      if (!pert.ghost) throw std::invalid_argument("inject: ghost perturbation missing");
      perceived.agents.push_back(*pert.ghost);
      break;
    }
    case FaultMode::MissingObstacle: {
      if (!spec.target) throw unknown_target(spec);
      const auto before = perceived.agents.size();
      std::erase_if(perceived.agents,
                    [&](const AgentState& a) { return a.id == *spec.target; });
      if (perceived.agents.size() == before) throw unknown_target(spec);
      break;
    }
    case FaultMode::Mislocalization: {
      perceived.ego.position += pert.position_offset;
      perceived.ego.heading = normalize_heading(perceived.ego.heading + pert.heading_offset);
      break;
    }
  }
  return perceived;
}

InjectResult inject(const WorldState& truth, const FaultSpec& spec, bool active,
                    RandomStream& stream) {
  if (!active) return {truth, std::nullopt};
  const Perturbation pert = draw_perturbation(truth, spec, stream);
  return {apply_perturbation(truth, spec, pert), truth};
}

FaultInjector::FaultInjector(std::vector<FaultSpec> specs, double duration, double dt,
                             std::uint64_t seed)
    : specs_(std::move(specs)), root_(seed) {
  schedules_.reserve(specs_.size());
  current_.resize(specs_.size());
  activation_count_.assign(specs_.size(), 0);
  for (std::size_t i = 0; i < specs_.size(); ++i) {
    RandomStream s = root_.substream({kScheduleSalt, i});
    schedules_.push_back(schedule_faults(specs_[i], duration, dt, s));
  }
}

FaultInjector::StepResult FaultInjector::step(const WorldState& truth) {
  StepResult out{truth, {}};
  for (std::size_t i = 0; i < specs_.size(); ++i) {
    const bool active = schedules_[i].active_at(truth.time);
    if (!active) {
      current_[i].reset();
      continue;
    }
    if (!current_[i]) {
      RandomStream s = root_.substream({kPerturbSalt, i, activation_count_[i]++});
      current_[i] = draw_perturbation(out.perceived, specs_[i], s);
    }
    out.perceived = apply_perturbation(out.perceived, specs_[i], *current_[i]);
    out.active.push_back(specs_[i]);
  }
  return out;
}

}  // namespace scenrisk::faults
