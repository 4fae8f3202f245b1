#include "scenrisk/costs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace scenrisk::costs {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLaneMatchRadius = 10.0;   // beyond this the ego is off-road
constexpr double kRedZoneLength = 15.0;     // meters past the stop point
}  // namespace

double ttc_pair(const AgentState& ego, const AgentState& agent) {
  const Vec2 r = agent.position - ego.position;
  const Vec2 w = agent.velocity() - ego.velocity();
  const double radius_sum = std::hypot(ego.extent.x, ego.extent.y) +
                            std::hypot(agent.extent.x, agent.extent.y);
  if (r.norm_sq() <= radius_sum * radius_sum) return 0.0;  // already overlapping
  // |r + w t|^2 = R^2  =>  (w.w) t^2 + 2 (r.w) t + (r.r - R^2) = 0
  const double a = w.norm_sq();
  const double b = 2.0 * r.dot(w);
  const double c = r.norm_sq() - radius_sum * radius_sum;
  if (a == 0.0) return kInf;  // no relative motion
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return kInf;  // paths never close within R
  const double sqrt_disc = std::sqrt(disc);
  const double t1 = (-b - sqrt_disc) / (2.0 * a);
  const double t2 = (-b + sqrt_disc) / (2.0 * a);
  if (t1 >= 0.0) return t1;
  if (t2 >= 0.0) return t2;
  return kInf;  // both roots in the past: receding
}

std::pair<double, double> decompose(const Vec2& v, double heading) {
  const Vec2 dir = unit_from_heading(heading);
  const Vec2 nrm{-dir.y, dir.x};
  return {v.dot(dir), v.dot(nrm)};
}

int rule_violations(const WorldState& world) {
  if (!world.map) return 0;
  const MapContext& map = *world.map;
  int count = 0;

  // Match the ego to its nearest lane; far from every lane counts as a
  // wrong-side violation by convention.
  const Lane* matched = nullptr;
  Polyline::Projection matched_proj;
  double best = kInf;
  for (const Lane& lane : map.lanes) {
    if (lane.centerline.size() < 2) continue;
    const Polyline line(lane.centerline);
    const auto proj = line.project(world.ego.position);
    if (proj.distance < best) {
      best = proj.distance;
      matched = &lane;
      matched_proj = proj;
    }
  }
  if (!matched || best > kLaneMatchRadius) {
    ++count;
  } else {
    const Polyline line(matched->centerline);
    double lane_heading = line.heading_at(matched_proj.s);
    if (!matched->forward) lane_heading = normalize_heading(lane_heading + kPi);
    const double diff = std::abs(normalize_heading(world.ego.heading - lane_heading));
    if (diff > kPi / 2.0) ++count;
  }

  // Red-light crossing: ego inside (stop_s, stop_s + zone] on the light's
  // lane while still moving.
  for (const TrafficLight& light : map.traffic_lights) {
    if (light.state != LightState::Red) continue;
    const Lane* lane = map.find_lane(light.lane);
    if (!lane || lane->centerline.size() < 2) continue;
    const Polyline line(lane->centerline);
    const auto proj = line.project(world.ego.position);
    if (proj.distance > kLaneMatchRadius) continue;
    if (proj.s > light.stop_s && proj.s <= light.stop_s + kRedZoneLength &&
        world.ego.speed > 0.0)
      ++count;
  }
  return count;
}

double ttc_cost(const WorldState& world, const CostConfig& cfg) {
  const double nu = cfg.rule_penalty * rule_violations(world);
  double worst = 0.0;
  for (const AgentState& a : world.agents) {
    const double ttc = ttc_pair(world.ego, a);
    const double risk = 1.0 - std::min(ttc / cfg.ttc_cap, 1.0);
    worst = std::max(worst, risk);
  }
  return nu + worst;
}

double msd_cost(const WorldState& world, const CostConfig& cfg) {
  const double nu = cfg.rule_penalty * rule_violations(world);
  double worst = 0.0;
  for (const AgentState& a : world.agents) {
    const auto [dx_par, dx_perp] = decompose(a.position - world.ego.position, world.ego.heading);
    const auto [dv_par, dv_perp] = decompose(a.velocity() - world.ego.velocity(), world.ego.heading);
    const double delta = (dx_par * dv_par) * (dx_par * dv_par) +
                         (dx_perp * dv_perp) * (dx_perp * dv_perp);
    const double w = cfg.weight(a.kind);
    const double term =
        cfg.msd_literal_formula ? std::exp(w * delta / 2.0) : w * std::exp(-delta / 2.0);
    worst = std::max(worst, term);
  }
  return nu + worst;
}

double scene_cost(const WorldState& world, const CostConfig& cfg) {
  return cfg.metric == CostMetric::Ttc ? ttc_cost(world, cfg) : msd_cost(world, cfg);
}

}  // namespace scenrisk::costs
