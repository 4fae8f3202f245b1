#include "scenrisk/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace scenrisk::sim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLaneHalfWidth = 1.75;  // in-lane lateral tolerance, meters
constexpr std::uint64_t kMonitorSalt = 0xC057000000000005ULL;

struct RouteLine {
  Polyline line;
  std::vector<std::pair<double, const Lane*>> lane_offsets;  // (start arc, lane)

  const Lane* lane_at(double s) const {
    const Lane* found = nullptr;
    for (const auto& [start, lane] : lane_offsets) {
      if (s >= start) found = lane;
    }
    return found ? found : (lane_offsets.empty() ? nullptr : lane_offsets.front().second);
  }
  double lane_start(const Lane* lane) const {
    for (const auto& [start, l] : lane_offsets)
      if (l == lane) return start;
    return 0.0;
  }
};

RouteLine build_route(const WorldState& world, const std::vector<LaneId>& lane_ids) {
  RouteLine route;
  std::vector<Vec2> pts;
  if (world.map) {
    for (LaneId lid : lane_ids) {
      const Lane* lane = world.map->find_lane(lid);
      if (!lane || lane->centerline.size() < 2) continue;
      double offset = 0.0;
      if (!pts.empty()) {
        Polyline so_far(pts);
        offset = so_far.length();
      }
      route.lane_offsets.emplace_back(offset, lane);
      for (const Vec2& p : lane->centerline) {
        if (pts.empty() || !(pts.back() == p)) pts.push_back(p);
      }
    }
  }
  if (pts.size() < 2) {
    pts = {world.ego.position,
           world.ego.position + unit_from_heading(world.ego.heading) * 200.0};
    route.lane_offsets.clear();
  }
  route.line = Polyline(std::move(pts));
  return route;
}

struct Leader {
  double s = 0.0;       // arc position on the follower's guide line
  double speed = 0.0;   // speed along the line, >= 0
  double half_len = 0.0;
};

// IDM + pure-pursuit rollout along a guide line, shared by the ego planner
// and IDM-policy agents.
EgoPlan roll_idm(const Vec2& pos0, double heading0, double speed0, double half_len,
                 const RouteLine& route, std::vector<Leader> leaders,
                 const IdmParams& params, int T, double dt) {
  EgoPlan plan;
  plan.dt = dt;
  plan.poses.reserve(static_cast<std::size_t>(T));

  Vec2 pos = pos0;
  double heading = heading0;
  double speed = speed0;
  double s = route.line.project(pos).s;

  for (int t = 0; t < T; ++t) {
    const bool route_done = s >= route.line.length() - 0.5;
    if (route_done) {
      speed = 0.0;
      plan.poses.push_back({pos, heading, speed});
      continue;
    }

    const Lane* lane = route.lane_at(s);
    IdmParams p = params;
    if (lane) p.desired_speed = lane->speed_limit;

    double accel = idm_accel(kInf, speed, 0.0, p);
    for (const Leader& lead : leaders) {
      const double gap = lead.s - s - half_len - lead.half_len;
      accel = std::min(accel, idm_accel(gap, speed, lead.speed, p));
    }

    speed = std::max(0.0, speed + accel * dt);

    // Pure pursuit toward a point ahead on the line.
    const double lookahead = std::max(3.0, 0.8 * speed);
    const Vec2 target = route.line.point_at(std::min(s + lookahead, route.line.length()));
    const Vec2 to_target = target - pos;
    if (speed > 0.0 && to_target.norm_sq() > 1e-12) {
      const double desired = std::atan2(to_target.y, to_target.x);
      const double alpha = normalize_heading(desired - heading);
      const double yaw_rate = 2.0 * speed * std::sin(alpha) / lookahead;
      heading = normalize_heading(heading + yaw_rate * dt);
    }
    pos += unit_from_heading(heading) * (speed * dt);
    s = route.line.project(pos).s;
    // Advance leaders at constant speed along the line.
    for (Leader& lead : leaders) lead.s += lead.speed * dt;

    plan.poses.push_back({pos, heading, speed});
  }
  return plan;
}

// Leaders for a follower at arc s0 on `route`: every other traffic
// participant projected within the lane width and ahead of s0, plus a
// stationary virtual leader at each red light on the route.
std::vector<Leader> gather_leaders(const WorldState& world, const RouteLine& route,
                                   double s0, AgentId self_id, bool self_is_ego,
                                   bool heed_lights) {
  std::vector<Leader> leaders;
  auto consider = [&](const Vec2& position, double heading, double speed,
                      double half_len) {
    const auto proj = route.line.project(position);
    if (proj.distance > kLaneHalfWidth) return;
    if (proj.s <= s0) return;
    const double along = speed * std::cos(heading - route.line.heading_at(proj.s));
    leaders.push_back({proj.s, std::max(0.0, along), half_len});
  };

  if (!self_is_ego)
    consider(world.ego.position, world.ego.heading, world.ego.speed, world.ego.extent.x);
  for (const AgentState& a : world.agents) {
    if (!self_is_ego && a.id == self_id) continue;
    consider(a.position, a.heading, a.speed, a.extent.x);
  }

  if (heed_lights && world.map) {
    for (const TrafficLight& light : world.map->traffic_lights) {
      if (light.state != LightState::Red) continue;
      const Lane* lane = world.map->find_lane(light.lane);
      if (!lane) continue;
      bool on_route = false;
      for (const auto& [start, l] : route.lane_offsets)
        if (l == lane) on_route = true;
      if (!on_route) continue;
      const double stop_s = route.lane_start(lane) + light.stop_s;
      if (stop_s > s0) leaders.push_back({stop_s, 0.0, 0.0});
    }
  }
  return leaders;
}

EgoPlan transform_plan(const EgoPlan& plan, const EgoState& from, const EgoState& to) {
  if (from.position == to.position && from.heading == to.heading) return plan;
  const double dtheta = normalize_heading(to.heading - from.heading);
  const double c = std::cos(dtheta), s = std::sin(dtheta);
  EgoPlan out = plan;
  for (PlanPose& pose : out.poses) {
    const Vec2 rel = pose.position - from.position;
    pose.position = to.position + Vec2{c * rel.x - s * rel.y, s * rel.x + c * rel.y};
    pose.heading = normalize_heading(pose.heading + dtheta);
  }
  return out;
}

void advance_agents(WorldState& world, const ScenarioSpec& spec, int step,
                    const IdmParams& idm) {
  for (AgentState& a : world.agents) {
    const AgentPolicy* policy = spec.find_policy(a.id);
    const PolicyKind kind = policy ? policy->kind : PolicyKind::Replay;
    if (kind == PolicyKind::Replay) {
      if (policy && !policy->trajectory.empty()) {
        const std::size_t idx =
            std::min(static_cast<std::size_t>(step), policy->trajectory.size() - 1);
        const PlanPose& p = policy->trajectory[idx];
        a.position = p.position;
        a.heading = p.heading;
        a.speed = p.speed;
      }
      // No trajectory: hold the initial pose.
      continue;
    }
    // IDM agent: follow its nearest lane, yielding to whoever is ahead.
    if (!world.map || world.map->lanes.empty()) continue;
    const Lane* best_lane = nullptr;
    double best_dist = kInf;
    for (const Lane& lane : world.map->lanes) {
      if (lane.centerline.size() < 2) continue;
      const auto proj = Polyline(lane.centerline).project(a.position);
      if (proj.distance < best_dist) {
        best_dist = proj.distance;
        best_lane = &lane;
      }
    }
    if (!best_lane) continue;
    RouteLine route = build_route(world, {best_lane->id});
    const double s0 = route.line.project(a.position).s;
    const auto leaders = gather_leaders(world, route, s0, a.id, false, false);
    const EgoPlan one = roll_idm(a.position, a.heading, a.speed, a.extent.x, route,
                                 leaders, idm, 1, spec.dt);
    a.position = one.poses[0].position;
    a.heading = one.poses[0].heading;
    a.speed = one.poses[0].speed;
  }
}

}  // namespace

double idm_accel(double gap, double speed, double lead_speed, const IdmParams& params) {
  const double floor_accel = -2.0 * params.comfort_decel;
  if (gap <= 0.0) return floor_accel;
  const double v0 = std::max(params.desired_speed, 1e-6);
  double s_star = params.min_gap + speed * params.time_headway +
                  speed * (speed - lead_speed) /
                      (2.0 * std::sqrt(params.max_accel * params.comfort_decel));
  s_star = std::max(0.0, s_star);
  const double ratio = gap == kInf ? 0.0 : s_star / gap;
  const double accel =
      params.max_accel * (1.0 - std::pow(speed / v0, params.exponent) - ratio * ratio);
  return std::clamp(accel, floor_accel, params.max_accel);
}

EgoPlan plan_ego(const WorldState& world, const IdmParams& params, int T, double dt) {
  if (T < 1) throw std::invalid_argument("plan_ego: T must be >= 1");
  const RouteLine route = build_route(world, world.ego.route);
  const double s0 = route.line.project(world.ego.position).s;
  const auto leaders = gather_leaders(world, route, s0, world.ego.id, true, true);
  return roll_idm(world.ego.position, world.ego.heading, world.ego.speed,
                  world.ego.extent.x, route, leaders, params, T, dt);
}

SimLog run_scenario(const ScenarioSpec& spec, const MonitorConfig& config,
                    std::uint64_t seed) {
  {
    const auto violations = validate_scenario(spec);
    if (!violations.empty()) {
      std::string msg = "run_scenario: invalid scenario:";
      for (const auto& v : violations) msg += "\n  " + v;
      throw std::invalid_argument(msg);
    }
  }

  const int steps = static_cast<int>(std::round(spec.duration / spec.dt));
  const int horizon = config.predictor.horizon;
  const std::size_t n = config.detector.n;
  const bool monitoring = config.run_rsr || config.run_baseline;

  SimLog log;
  log.steps.reserve(static_cast<std::size_t>(steps));
  log.bounds.assign(static_cast<std::size_t>(steps), StepBounds{});

  faults::FaultInjector injector(spec.faults, spec.duration, spec.dt, seed);
  const RandomStream root(seed);

  WorldState truth = spec.initial;
  truth.time = 0.0;
  WorldHistory perceived_history{spec.dt, {}};

  for (int k = 0; k < steps; ++k) {
    truth.time = k * spec.dt;

    auto injected = injector.step(truth);
    injected.perceived.time = truth.time;
    perceived_history.states.push_back(injected.perceived);

    SimStep record;
    record.time = truth.time;
    record.truth = truth;
    record.perceived = injected.perceived;
    for (std::size_t fi = 0; fi < spec.faults.size(); ++fi)
      if (injector.schedules()[fi].active_at(truth.time)) record.active_faults.push_back(fi);

    // Ground-truth collision label for this step.
    const Footprint ego_fp = truth.ego.footprint();
    for (const AgentState& a : truth.agents) {
      if (collision(ego_fp, a.footprint())) {
        record.collision = true;
        break;
      }
    }
    if (record.collision && !log.first_collision_time)
      log.first_collision_time = truth.time;

    // Monitor: compare perceived vs corrected scenes while a fault is active.
    if (monitoring && !injected.active.empty()) {
      const EgoPlan plan_m =
          plan_ego(injected.perceived, config.idm, horizon, config.predictor.dt);
      const std::uint64_t step_seed =
          root.substream({kMonitorSalt, static_cast<std::uint64_t>(k)}).next_u64();

      const WorldState& perceived_now = injected.perceived;
      const WorldState truth_now = truth;
      const auto active_faults = injected.active;
      predict::SceneSampler sampler = [&](RandomStream& stream) {
        WorldState corrected = plausible::generate_plausible(
            perceived_history, active_faults, truth_now, config.noise, stream);
        EgoPlan shifted = transform_plan(plan_m, perceived_now.ego, corrected.ego);
        return std::make_pair(std::move(corrected), std::move(shifted));
      };

      const bool want_coll = config.run_baseline;
      const auto batch_a =
          predict::rollout_batch(perceived_history, plan_m, config.predictor,
                                 &config.cost, n, step_seed, nullptr, want_coll);
      const auto batch_b =
          predict::rollout_batch(perceived_history, plan_m, config.predictor,
                                 &config.cost, n, step_seed, &sampler, want_coll);

      if (config.run_rsr) {
        std::vector<double> col_a(n), col_b(n);
        StepBounds best{0.0, 1.0};
        double best_key = -1.0;
        bool found_alarm = false;
        AlarmRecord alarm;
        for (int tau = 1; tau <= horizon; ++tau) {
          for (std::size_t i = 0; i < n; ++i) {
            col_a[i] = batch_a.costs[i][static_cast<std::size_t>(tau - 1)];
            col_b[i] = batch_b.costs[i][static_cast<std::size_t>(tau - 1)];
          }
          const auto bounds =
              stats::rsr_bounds(col_a, col_b, config.detector.p, config.detector.alpha);
          if (bounds.lower > best_key) {
            best_key = bounds.lower;
            best = {bounds.lower, bounds.upper};
          }
          const bool triggered = std::min(config.detector.p, bounds.v_high) <
                                 config.detector.p * (1.0 - config.detector.gamma);
          if (triggered && !found_alarm) {
            found_alarm = true;
            alarm = {truth.time, tau, bounds.lower, bounds.upper};
          }
        }
        log.bounds[static_cast<std::size_t>(k)] = best;
        if (found_alarm) log.alarms.push_back(alarm);
      }

      if (config.run_baseline) {
        double p_perceived = 0.0, p_plausible = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          p_perceived += batch_a.collided[i];
          p_plausible += batch_b.collided[i];
        }
        p_perceived /= static_cast<double>(n);
        p_plausible /= static_cast<double>(n);
        if (p_plausible > p_perceived && p_plausible > config.detector.gamma)
          log.baseline_alarms.push_back(truth.time);
      }
    }

    // Advance the truth one step; faults never touch this stream.
    const EgoPlan truth_plan = plan_ego(truth, config.idm, horizon, spec.dt);
    record.ego_plan = truth_plan;
    log.steps.push_back(std::move(record));

    advance_agents(truth, spec, k, config.idm);
    truth.ego.position = truth_plan.poses[0].position;
    truth.ego.heading = truth_plan.poses[0].heading;
    truth.ego.speed = truth_plan.poses[0].speed;
  }

  return log;
}

}  // namespace scenrisk::sim
