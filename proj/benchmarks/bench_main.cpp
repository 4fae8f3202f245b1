// Micro-benchmarks for the hot paths: empirical-CDF construction, risk-bound
// evaluation, Monte-Carlo rollouts with cost scoring, and the end-to-end
// monitored simulation step.
#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "scenrisk/costs.hpp"
#include "scenrisk/ecdf.hpp"
#include "scenrisk/predict.hpp"
#include "scenrisk/risk.hpp"
#include "scenrisk/rng.hpp"
#include "scenrisk/sim.hpp"
#include "scenrisk/types.hpp"

namespace {

using namespace scenrisk;

std::vector<double> random_samples(std::size_t n, std::uint64_t seed) {
  RandomStream s(seed);
  std::vector<double> xs(n);
  for (double& x : xs) x = s.uniform01();
  return xs;
}

std::shared_ptr<MapContext> straight_map() {
  auto map = std::make_shared<MapContext>();
  Lane lane;
  lane.id = 1;
  lane.centerline = {{-50.0, 0.0}, {350.0, 0.0}};
  lane.speed_limit = 13.0;
  lane.forward = true;
  map->lanes.push_back(lane);
  return map;
}

AgentState make_agent(AgentId id, double x, double y, double speed) {
  AgentState a;
  a.id = id;
  a.kind = AgentKind::Vehicle;
  a.position = {x, y};
  a.heading = 0.0;
  a.speed = speed;
  a.extent = {2.25, 1.0};
  return a;
}

WorldState make_world(int agents) {
  WorldState world;
  world.time = 0.0;
  world.map = straight_map();
  world.ego.id = 0;
  world.ego.kind = AgentKind::Vehicle;
  world.ego.position = {0.0, 0.0};
  world.ego.heading = 0.0;
  world.ego.speed = 13.0;
  world.ego.extent = {2.25, 1.0};
  world.ego.route = {1};
  for (int i = 0; i < agents; ++i)
    world.agents.push_back(
        make_agent(i + 1, 15.0 + 8.0 * i, (i % 2 == 0) ? 0.0 : 3.5, 8.0));
  return world;
}

EgoPlan straight_plan(const WorldState& world, int horizon) {
  EgoPlan plan;
  plan.dt = 0.1;
  for (int k = 1; k <= horizon; ++k) {
    PlanPose pose;
    pose.position = {world.ego.position.x + world.ego.speed * 0.1 * k, 0.0};
    pose.heading = 0.0;
    pose.speed = world.ego.speed;
    plan.poses.push_back(pose);
  }
  return plan;
}

void BM_EcdfQuantile(benchmark::State& state) {
  const auto xs = random_samples(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) {
    const stats::Ecdf ecdf{xs};
    benchmark::DoNotOptimize(ecdf.quantile(0.99));
  }
}
BENCHMARK(BM_EcdfQuantile)->Arg(100)->Arg(1000)->Arg(10000);

void BM_RiskBounds(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto a = random_samples(n, 21);
  const auto b = random_samples(n, 22);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stats::rsr_bounds(a, b, 0.99, 0.1));
  }
}
BENCHMARK(BM_RiskBounds)->Arg(100)->Arg(1000)->Arg(10000);

void BM_SceneCost(benchmark::State& state) {
  const WorldState world = make_world(static_cast<int>(state.range(0)));
  costs::CostConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(costs::scene_cost(world, cfg));
  }
}
BENCHMARK(BM_SceneCost)->Arg(1)->Arg(8)->Arg(32);

void BM_RolloutBatch(benchmark::State& state) {
  const WorldState world = make_world(4);
  WorldHistory history;
  history.dt = 0.1;
  history.states = {world};
  const EgoPlan plan = straight_plan(world, 20);
  predict::PredictorConfig predictor;
  costs::CostConfig cost;
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        predict::rollout_batch(history, plan, predictor, &cost, n, 33));
  }
}
BENCHMARK(BM_RolloutBatch)->Arg(8)->Arg(64);

void BM_MonitoredScenario(benchmark::State& state) {
  ScenarioSpec spec;
  spec.name = "bench";
  spec.map = straight_map();
  WorldState world = make_world(0);
  world.agents.push_back(make_agent(1, 60.0, 0.0, 0.0));
  spec.initial = world;
  FaultSpec fault;
  fault.mode = FaultMode::MissingObstacle;
  fault.subtype = FaultSubtype::InPath;
  fault.timing = FaultTiming::Static;
  fault.target = 1;
  spec.faults = {fault};
  spec.duration = 1.0;
  spec.dt = 0.1;

  sim::MonitorConfig cfg;
  cfg.detector = stats::DetectorParams(0.99, 0.9, 0.1, 40);
  cfg.predictor.horizon = 10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sim::run_scenario(spec, cfg, 44));
  }
}
BENCHMARK(BM_MonitoredScenario);

}  // namespace

BENCHMARK_MAIN();
