// Collision-probability reference detector: estimator limits, agreement
// with the rollout collision flags, and the strict alarm rule.
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "doctest.h"
#include "scenrisk/baselines.hpp"
#include "scenrisk/predict.hpp"
#include "scenrisk/types.hpp"
#include "test_helpers.hpp"

using namespace scenrisk;
using namespace scenrisk::baselines;
using testutil::make_agent;
using testutil::make_ego;
using testutil::make_world;
using testutil::one_step_history;
using testutil::straight_plan;

namespace {

predict::PredictorConfig noise_free() {
  predict::PredictorConfig cfg;
  cfg.heading_noise_std = 0.0;
  cfg.accel_noise_std = 0.0;
  cfg.intent_modes = {{0.0, 1.0}};
  return cfg;
}

}  // namespace

TEST_CASE("parameter guard rails") {
  CHECK_THROWS_AS(BaselineParams(0.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(BaselineParams(1.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(BaselineParams(0.9, 1), std::invalid_argument);
  const BaselineParams ok(0.9, 100);
  CHECK(ok.gamma == 0.9);
  CHECK(ok.n == 100);
}

TEST_CASE("a deterministic crash course estimates probability one") {
  WorldState world = make_world({make_agent(1, 6.0, 0.0, 0.0, 0.0)}, nullptr);
  world.ego = make_ego(0.0, 0.0, 0.0, 5.0);
  const EgoPlan plan = straight_plan(world.ego, 20);
  CHECK(collision_probability(one_step_history(world), plan, noise_free(), 50, 7) ==
        1.0);
}

TEST_CASE("distant traffic estimates probability zero") {
  WorldState world = make_world({make_agent(1, 500.0, 80.0, 0.0, 0.0)}, nullptr);
  world.ego = make_ego(0.0, 0.0, 0.0, 5.0);
  const EgoPlan plan = straight_plan(world.ego, 20);
  CHECK(collision_probability(one_step_history(world), plan, noise_free(), 50, 7) ==
        0.0);
}

TEST_CASE("the estimate equals the collision-flag average of the same batch") {
  // Borderline geometry: a car closing from 10 m reaches the stationary ego
  // under the keep and accelerate intents but stops short under the brake
  // intent, so the mixture puts the estimate strictly inside (0, 1).
  WorldState world = make_world({make_agent(1, 10.0, 0.0, 3.141592653589793, 5.0)},
                                nullptr);
  world.ego = make_ego(0.0, 0.0, 0.0, 0.0);
  const WorldHistory history = one_step_history(world);
  const EgoPlan plan;  // ego holds its pose
  predict::PredictorConfig cfg;  // default noise and intent mixture

  const std::size_t n = 200;
  const double p = collision_probability(history, plan, cfg, n, 99);
  const auto batch = predict::rollout_batch(history, plan, cfg, nullptr, n, 99,
                                            nullptr, /*want_collisions=*/true);
  double hits = 0.0;
  for (std::uint8_t c : batch.collided) hits += c;
  CHECK(p == hits / static_cast<double>(n));
  CHECK(p > 0.0);
  CHECK(p < 1.0);
  CHECK_THROWS_AS(collision_probability(history, plan, cfg, 1, 99),
                  std::invalid_argument);
}

TEST_CASE("the alarm rule needs a strictly riskier corrected scene above the bar") {
  const BaselineParams params(0.9, 100);
  CHECK(baseline_detect(0.5, 0.95, params));
  CHECK_FALSE(baseline_detect(0.95, 0.95, params));  // not strictly riskier
  CHECK_FALSE(baseline_detect(0.96, 0.95, params));  // safer than perceived
  CHECK_FALSE(baseline_detect(0.5, 0.9, params));    // exactly at the bar
  CHECK_FALSE(baseline_detect(0.5, 0.6, params));    // riskier but below the bar
  CHECK(baseline_detect(0.0, 0.9000001, params));
}
