#include "scenrisk/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace scenrisk::io {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw SchemaError(msg); }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail(path + ": " + e.what());
  }
  return j;
}

Vec2 parse_vec2(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(field + ": expected [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

AgentKind parse_kind(const std::string& s, const std::string& field) {
  if (s == "vehicle") return AgentKind::Vehicle;
  if (s == "pedestrian") return AgentKind::Pedestrian;
  if (s == "bicycle") return AgentKind::Bicycle;
  fail(field + ": unknown agent kind '" + s + "'");
}

std::string kind_name(AgentKind k) {
  switch (k) {
    case AgentKind::Vehicle: return "vehicle";
    case AgentKind::Pedestrian: return "pedestrian";
    case AgentKind::Bicycle: return "bicycle";
  }
  return "vehicle";
}

FaultMode parse_mode(const std::string& s, const std::string& field) {
  if (s == "misdetect_orientation") return FaultMode::MisdetectOrientation;
  if (s == "misdetect_size") return FaultMode::MisdetectSize;
  if (s == "misdetect_velocity") return FaultMode::MisdetectVelocity;
  if (s == "misdetect_traffic_light") return FaultMode::MisdetectTrafficLight;
  if (s == "ghost_obstacle") return FaultMode::GhostObstacle;
  if (s == "missing_obstacle") return FaultMode::MissingObstacle;
  if (s == "mislocalization") return FaultMode::Mislocalization;
  fail(field + ": unknown fault mode '" + s + "'");
}

std::string mode_name(FaultMode m) {
  switch (m) {
    case FaultMode::MisdetectOrientation: return "misdetect_orientation";
    case FaultMode::MisdetectSize: return "misdetect_size";
    case FaultMode::MisdetectVelocity: return "misdetect_velocity";
    case FaultMode::MisdetectTrafficLight: return "misdetect_traffic_light";
    case FaultMode::GhostObstacle: return "ghost_obstacle";
    case FaultMode::MissingObstacle: return "missing_obstacle";
    case FaultMode::Mislocalization: return "mislocalization";
  }
  return "missing_obstacle";
}

FaultSubtype parse_subtype(const std::string& s, const std::string& field) {
  if (s == "in_path") return FaultSubtype::InPath;
  if (s == "not_in_path") return FaultSubtype::NotInPath;
  if (s == "none") return FaultSubtype::None;
  fail(field + ": unknown fault subtype '" + s + "'");
}

std::string subtype_name(FaultSubtype s) {
  switch (s) {
    case FaultSubtype::InPath: return "in_path";
    case FaultSubtype::NotInPath: return "not_in_path";
    case FaultSubtype::None: return "none";
  }
  return "none";
}

FaultTiming parse_timing(const std::string& s, const std::string& field) {
  if (s == "static") return FaultTiming::Static;
  if (s == "dynamic") return FaultTiming::Dynamic;
  fail(field + ": unknown fault timing '" + s + "'");
}

LightState parse_light(const std::string& s, const std::string& field) {
  if (s == "red") return LightState::Red;
  if (s == "green") return LightState::Green;
  fail(field + ": unknown light state '" + s + "'");
}

json vec2_json(const Vec2& v) { return json::array({v.x, v.y}); }

ScenarioSpec parse_scenario_json(const json& j) {
  ScenarioSpec spec;
  if (j.contains("schema_version") && j["schema_version"].get<int>() != kSchemaVersion)
    fail("schema_version: unsupported version");
  spec.name = j.value("name", "");

  if (!j.contains("map")) fail("map: missing");
  auto map = std::make_shared<MapContext>();
  for (const json& lj : j["map"].value("lanes", json::array())) {
    Lane lane;
    lane.id = lj.value("id", 0);
    for (const json& pj : lj.value("centerline", json::array()))
      lane.centerline.push_back(parse_vec2(pj, "lane centerline point"));
    lane.speed_limit = lj.value("speed_limit", 13.0);
    lane.forward = lj.value("forward", true);
    map->lanes.push_back(std::move(lane));
  }
  for (const json& tj : j["map"].value("traffic_lights", json::array())) {
    TrafficLight light;
    light.id = tj.value("id", 0);
    light.lane = tj.value("lane", 0);
    light.stop_s = tj.value("stop_s", 0.0);
    light.state = parse_light(tj.value("state", "green"), "traffic light state");
    map->traffic_lights.push_back(light);
  }
  spec.map = map;

  if (!j.contains("ego")) fail("ego: missing");
  const json& ej = j["ego"];
  spec.initial.time = 0.0;
  spec.initial.map = map;
  spec.initial.ego.id = ej.value("id", 0);
  spec.initial.ego.kind = AgentKind::Vehicle;
  spec.initial.ego.position = parse_vec2(ej.value("position", json::array({0, 0})), "ego position");
  spec.initial.ego.heading = ej.value("heading", 0.0);
  spec.initial.ego.speed = ej.value("speed", 0.0);
  spec.initial.ego.extent = parse_vec2(ej.value("extent", json::array({2.25, 1.0})), "ego extent");
  for (const json& r : ej.value("route", json::array()))
    spec.initial.ego.route.push_back(r.get<LaneId>());

  for (const json& aj : j.value("agents", json::array())) {
    AgentState a;
    a.id = aj.value("id", 0);
    a.kind = parse_kind(aj.value("kind", "vehicle"), "agent kind");
    a.position = parse_vec2(aj.value("position", json::array({0, 0})), "agent position");
    a.heading = aj.value("heading", 0.0);
    a.speed = aj.value("speed", 0.0);
    a.extent = parse_vec2(aj.value("extent", json::array({2.25, 1.0})), "agent extent");
    spec.initial.agents.push_back(a);

    AgentPolicy policy;
    policy.agent = a.id;
    const std::string pk = aj.value("policy", "replay");
    if (pk == "idm")
      policy.kind = PolicyKind::Idm;
    else if (pk == "replay")
      policy.kind = PolicyKind::Replay;
    else
      fail("agent policy: unknown policy '" + pk + "'");
    for (const json& tp : aj.value("trajectory", json::array())) {
      if (!tp.is_array() || tp.size() != 4) fail("trajectory: expected [x, y, heading, speed]");
      PlanPose pose;
      pose.position = {tp[0].get<double>(), tp[1].get<double>()};
      pose.heading = tp[2].get<double>();
      pose.speed = tp[3].get<double>();
      policy.trajectory.push_back(pose);
    }
    spec.policies.push_back(std::move(policy));
  }

  for (const json& fj : j.value("faults", json::array())) {
    FaultSpec f;
    f.mode = parse_mode(fj.value("mode", ""), "fault mode");
    f.subtype = parse_subtype(fj.value("subtype", "none"), "fault subtype");
    f.timing = parse_timing(fj.value("timing", "static"), "fault timing");
    if (fj.contains("target")) f.target = fj["target"].get<std::int64_t>();
    if (fj.contains("params")) {
      FaultParams p;
      p.mean = fj["params"].value("mean", 0.0);
      p.std = fj["params"].value("std", 0.0);
      f.params = p;
    }
    spec.faults.push_back(f);
  }

  spec.duration = j.value("duration", 20.0);
  spec.dt = j.value("dt", 0.1);
  return spec;
}

}  // namespace

ScenarioSpec parse_scenario(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("scenario: ") + e.what());
  }
  ScenarioSpec spec = parse_scenario_json(j);
  const auto violations = validate_scenario(spec);
  if (!violations.empty()) {
    std::string msg = "scenario validation failed:";
    for (const auto& v : violations) msg += "\n  " + v;
    fail(msg);
  }
  return spec;
}

ScenarioSpec load_scenario(const std::string& path) {
  const json j = read_json_file(path);
  ScenarioSpec spec = parse_scenario_json(j);
  const auto violations = validate_scenario(spec);
  if (!violations.empty()) {
    std::string msg = path + ": scenario validation failed:";
    for (const auto& v : violations) msg += "\n  " + v;
    fail(msg);
  }
  return spec;
}

std::string emit_scenario(const ScenarioSpec& spec) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = spec.name;

  json lanes = json::array();
  for (const Lane& lane : spec.map->lanes) {
    json lj;
    lj["id"] = lane.id;
    json pts = json::array();
    for (const Vec2& p : lane.centerline) pts.push_back(vec2_json(p));
    lj["centerline"] = pts;
    lj["speed_limit"] = lane.speed_limit;
    lj["forward"] = lane.forward;
    lanes.push_back(lj);
  }
  json lights = json::array();
  for (const TrafficLight& t : spec.map->traffic_lights) {
    json tj;
    tj["id"] = t.id;
    tj["lane"] = t.lane;
    tj["stop_s"] = t.stop_s;
    tj["state"] = t.state == LightState::Red ? "red" : "green";
    lights.push_back(tj);
  }
  j["map"] = {{"lanes", lanes}, {"traffic_lights", lights}};

  json ej;
  ej["id"] = spec.initial.ego.id;
  ej["position"] = vec2_json(spec.initial.ego.position);
  ej["heading"] = spec.initial.ego.heading;
  ej["speed"] = spec.initial.ego.speed;
  ej["extent"] = vec2_json(spec.initial.ego.extent);
  ej["route"] = spec.initial.ego.route;
  j["ego"] = ej;

  json agents = json::array();
  for (const AgentState& a : spec.initial.agents) {
    json aj;
    aj["id"] = a.id;
    aj["kind"] = kind_name(a.kind);
    aj["position"] = vec2_json(a.position);
    aj["heading"] = a.heading;
    aj["speed"] = a.speed;
    aj["extent"] = vec2_json(a.extent);
    const AgentPolicy* policy = spec.find_policy(a.id);
    aj["policy"] = (policy && policy->kind == PolicyKind::Idm) ? "idm" : "replay";
    if (policy && !policy->trajectory.empty()) {
      json traj = json::array();
      for (const PlanPose& p : policy->trajectory)
        traj.push_back(json::array({p.position.x, p.position.y, p.heading, p.speed}));
      aj["trajectory"] = traj;
    }
    agents.push_back(aj);
  }
  j["agents"] = agents;

  json faults = json::array();
  for (const FaultSpec& f : spec.faults) {
    json fj;
    fj["mode"] = mode_name(f.mode);
    fj["subtype"] = subtype_name(f.subtype);
    fj["timing"] = f.timing == FaultTiming::Static ? "static" : "dynamic";
    if (f.target) fj["target"] = *f.target;
    if (f.params) fj["params"] = {{"mean", f.params->mean}, {"std", f.params->std}};
    faults.push_back(fj);
  }
  j["faults"] = faults;

  j["duration"] = spec.duration;
  j["dt"] = spec.dt;
  return j.dump(2);
}

namespace {

sim::MonitorConfig parse_config_json(const json& j) {
  sim::MonitorConfig cfg;
  if (j.contains("detector")) {
    const json& d = j["detector"];
    cfg.detector = stats::DetectorParams(
        d.value("p", 0.99), d.value("gamma", 0.9), d.value("alpha", 0.1),
        d.value("n", static_cast<std::size_t>(1000)));
  }
  if (j.contains("cost")) {
    const json& c = j["cost"];
    const std::string metric = c.value("metric", "msd");
    if (metric == "msd")
      cfg.cost.metric = costs::CostMetric::Msd;
    else if (metric == "ttc")
      cfg.cost.metric = costs::CostMetric::Ttc;
    else
      fail("cost.metric: unknown metric '" + metric + "'");
    cfg.cost.ttc_cap = c.value("ttc_cap", 3.0);
    if (c.contains("weights")) {
      cfg.cost.weight_vehicle = c["weights"].value("vehicle", 0.5);
      cfg.cost.weight_pedestrian = c["weights"].value("pedestrian", 1.0);
      cfg.cost.weight_bicycle = c["weights"].value("bicycle", 1.0);
    }
    cfg.cost.msd_literal_formula = c.value("msd_literal_formula", false);
    cfg.cost.rule_penalty = c.value("rule_penalty", 1.0);
    if (!(cfg.cost.ttc_cap > 0.0)) fail("cost.ttc_cap: must be positive");
    if (cfg.cost.weight_vehicle <= 0.0 || cfg.cost.weight_pedestrian <= 0.0 ||
        cfg.cost.weight_bicycle <= 0.0)
      fail("cost.weights: must be positive");
  }
  if (j.contains("predictor")) {
    const json& p = j["predictor"];
    cfg.predictor.horizon = p.value("horizon", 20);
    cfg.predictor.dt = p.value("dt", 0.1);
    cfg.predictor.heading_noise_std = p.value("heading_noise_std", 0.05);
    cfg.predictor.accel_noise_std = p.value("accel_noise_std", 0.8);
    if (p.contains("intent_modes")) {
      cfg.predictor.intent_modes.clear();
      for (const json& m : p["intent_modes"])
        cfg.predictor.intent_modes.push_back(
            {m.value("accel", 0.0), m.value("probability", 0.0)});
      double total = 0.0;
      for (const auto& m : cfg.predictor.intent_modes) {
        if (m.probability < 0.0 || m.probability > 1.0)
          fail("predictor.intent_modes: probabilities must lie in [0, 1]");
        total += m.probability;
      }
      if (cfg.predictor.intent_modes.empty() || std::abs(total - 1.0) > 1e-9)
        fail("predictor.intent_modes: probabilities must sum to 1");
    }
    if (cfg.predictor.horizon < 1) fail("predictor.horizon: must be >= 1");
    if (!(cfg.predictor.dt > 0.0)) fail("predictor.dt: must be positive");
  }
  if (j.contains("noise")) {
    const json& nj = j["noise"];
    cfg.noise.pos_std = nj.value("pos_std", 0.2);
    cfg.noise.heading_std = nj.value("heading_std", 0.1);
    cfg.noise.speed_std = nj.value("speed_std", 0.1);
    if (cfg.noise.pos_std < 0.0 || cfg.noise.heading_std < 0.0 || cfg.noise.speed_std < 0.0)
      fail("noise: stds must be non-negative");
  }
  if (j.contains("idm")) {
    const json& i = j["idm"];
    cfg.idm.desired_speed = i.value("desired_speed", 13.0);
    cfg.idm.time_headway = i.value("time_headway", 1.5);
    cfg.idm.max_accel = i.value("max_accel", 1.0);
    cfg.idm.comfort_decel = i.value("comfort_decel", 1.5);
    cfg.idm.min_gap = i.value("min_gap", 2.0);
    cfg.idm.exponent = i.value("exponent", 4.0);
    if (cfg.idm.desired_speed <= 0.0 || cfg.idm.time_headway <= 0.0 ||
        cfg.idm.max_accel <= 0.0 || cfg.idm.comfort_decel <= 0.0 ||
        cfg.idm.min_gap <= 0.0 || cfg.idm.exponent <= 0.0)
      fail("idm: all parameters must be positive");
  }
  return cfg;
}

}  // namespace

sim::MonitorConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("config: ") + e.what());
  }
  return parse_config_json(j);
}

sim::MonitorConfig load_config(const std::string& path) {
  return parse_config_json(read_json_file(path));
}

}  // namespace scenrisk::io
