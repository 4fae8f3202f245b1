#include "scenrisk/predict.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scenrisk::predict {

namespace {

// Substream salts (arbitrary fixed keys; distinct per purpose).
constexpr std::uint64_t kAgentSalt = 0xA6E2700000000001ULL;
constexpr std::uint64_t kSceneSalt = 0xB1A5000000000002ULL;

struct AgentRoll {
  double mode_accel = 0.0;
  RandomStream stream{0};
};

// Draw each agent's intent mode and per-agent noise stream. Keyed by agent
// id so adding/removing one agent leaves the others' draws untouched.
std::vector<AgentRoll> init_rolls(const WorldState& state, const PredictorConfig& cfg,
                                  const RandomStream& rollout_stream) {
  std::vector<double> weights;
  weights.reserve(cfg.intent_modes.size());
  for (const IntentMode& m : cfg.intent_modes) weights.push_back(m.probability);

  std::vector<AgentRoll> rolls;
  rolls.reserve(state.agents.size());
  for (const AgentState& a : state.agents) {
    AgentRoll r;
    r.stream = rollout_stream.substream({kAgentSalt, static_cast<std::uint64_t>(a.id)});
    const std::size_t mode = r.stream.categorical(weights);
    r.mode_accel = cfg.intent_modes[mode].accel;
    rolls.push_back(r);
  }
  return rolls;
}

// Advance one agent a single step in place.
void step_agent(AgentState& a, AgentRoll& roll, const PredictorConfig& cfg, double dt) {
  const double heading_noise = roll.stream.normal(0.0, cfg.heading_noise_std * std::sqrt(dt));
  const double accel = roll.mode_accel + roll.stream.normal(0.0, cfg.accel_noise_std);
  a.heading = normalize_heading(a.heading + heading_noise);
  a.speed = std::max(0.0, a.speed + accel * dt);
  a.position += unit_from_heading(a.heading) * (a.speed * dt);
}

void apply_plan_pose(EgoState& ego, const EgoPlan& plan, int step) {
  if (plan.poses.empty()) return;  // no plan: ego holds pose
  const int idx = std::min<int>(step, static_cast<int>(plan.poses.size()) - 1);
  const PlanPose& p = plan.poses[static_cast<std::size_t>(idx)];
  ego.position = p.position;
  ego.heading = p.heading;
  ego.speed = p.speed;
}

}  // namespace

std::vector<WorldState> sample_future(const WorldHistory& history, const EgoPlan& plan,
                                      const PredictorConfig& cfg, RandomStream& stream) {
  if (history.states.empty()) throw std::invalid_argument("sample_future: empty history");
  WorldState state = history.current();
  auto rolls = init_rolls(state, cfg, stream);

  std::vector<WorldState> future;
  future.reserve(static_cast<std::size_t>(cfg.horizon));
  for (int t = 0; t < cfg.horizon; ++t) {
    for (std::size_t k = 0; k < state.agents.size(); ++k)
      step_agent(state.agents[k], rolls[k], cfg, cfg.dt);
    apply_plan_pose(state.ego, plan, t);
    state.time += cfg.dt;
    future.push_back(state);
  }
  return future;
}

RolloutBatch rollout_batch(const WorldHistory& history, const EgoPlan& plan,
                           const PredictorConfig& cfg, const costs::CostConfig* cost,
                           std::size_t n, std::uint64_t seed, const SceneSampler* scene,
                           bool want_collisions) {
  if (history.states.empty()) throw std::invalid_argument("rollout_batch: empty history");
  if (cfg.horizon < 1) throw std::invalid_argument("rollout_batch: horizon must be >= 1");

  RolloutBatch out;
  if (cost) out.costs.assign(n, std::vector<double>(static_cast<std::size_t>(cfg.horizon)));
  if (want_collisions) out.collided.assign(n, 0);

  const RandomStream root(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const RandomStream rollout_stream = root.substream({i});

    WorldState state = history.current();
    EgoPlan rollout_plan = plan;
    if (scene) {
      RandomStream scene_stream = root.substream({i, kSceneSalt});
      auto drawn = (*scene)(scene_stream);
      state = std::move(drawn.first);
      rollout_plan = std::move(drawn.second);
    }

    auto rolls = init_rolls(state, cfg, rollout_stream);
    for (int t = 0; t < cfg.horizon; ++t) {
      for (std::size_t k = 0; k < state.agents.size(); ++k)
        step_agent(state.agents[k], rolls[k], cfg, cfg.dt);
      apply_plan_pose(state.ego, rollout_plan, t);
      state.time += cfg.dt;
      if (cost) out.costs[i][static_cast<std::size_t>(t)] = costs::scene_cost(state, *cost);
      if (want_collisions && !out.collided[i]) {
        const Footprint ego_fp = state.ego.footprint();
        for (const AgentState& a : state.agents) {
          if (rectangles_overlap(ego_fp, a.footprint())) {
            out.collided[i] = 1;
            break;
          }
        }
      }
    }
  }
  return out;
}

std::vector<double> cost_samples(const CostSampleRequest& req, const SceneSampler* scene) {
  if (req.n < 2) throw std::invalid_argument("cost_samples: need n >= 2");
  if (req.tau < 1 || req.tau > req.predictor.horizon)
    throw std::invalid_argument("cost_samples: tau outside [1, horizon]");
  const RolloutBatch batch =
      rollout_batch(req.history, req.plan, req.predictor, &req.cost, req.n, req.seed, scene);
  std::vector<double> column(req.n);
  for (std::size_t i = 0; i < req.n; ++i)
    column[i] = batch.costs[i][static_cast<std::size_t>(req.tau - 1)];
  return column;
}

}  // namespace scenrisk::predict
