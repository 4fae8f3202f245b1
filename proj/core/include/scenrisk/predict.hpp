#ifndef SCENRISK_PREDICT_HPP
#define SCENRISK_PREDICT_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "scenrisk/costs.hpp"
#include "scenrisk/rng.hpp"
#include "scenrisk/types.hpp"

namespace scenrisk::predict {

struct IntentMode {
  double accel = 0.0;       // m/s^2 held for the whole rollout
  double probability = 0.0;  // mode weight; modes must sum to 1
};

struct PredictorConfig {
  int horizon = 20;  // steps
  double dt = 0.1;   // seconds per step
  double heading_noise_std = 0.05;  // rad per sqrt(second)
  double accel_noise_std = 0.8;     // m/s^2, white per-step
  std::vector<IntentMode> intent_modes = {
      {0.0, 0.6},   // keep speed
      {-3.0, 0.2},  // brake
      {1.5, 0.2},   // accelerate
  };
};

/// Optional per-rollout scene override: draws an alternative (state, plan)
/// pair from its own substream. Rollout noise streams are shared with the
/// unmodified scene, so two batches with the same seed differ only through
/// the scene itself (common random numbers).
using SceneSampler =
    std::function<std::pair<WorldState, EgoPlan>(RandomStream& stream)>;

/// One Monte-Carlo rollout of every agent over cfg.horizon steps: each agent
/// draws an intent mode, then integrates constant-heading kinematics with
/// per-step Gaussian heading/accel perturbations; speeds never go negative.
/// The ego follows `plan` exactly. Returns the horizon future states.
std::vector<WorldState> sample_future(const WorldHistory& history, const EgoPlan& plan,
                                      const PredictorConfig& cfg, RandomStream& stream);

struct RolloutBatch {
  /// costs[i][tau-1] = configured scene cost of rollout i at lookahead tau.
  std::vector<std::vector<double>> costs;
  /// collided[i] = 1 iff the ego footprint overlaps any agent at any step
  /// of rollout i. Filled only when requested.
  std::vector<std::uint8_t> collided;
};

/// n independent rollouts (substreams keyed by rollout index), each scored
/// by `cost` at every lookahead step; optionally also flags any-step ego
/// collision per rollout. `cost` may be null when only collisions matter.
RolloutBatch rollout_batch(const WorldHistory& history, const EgoPlan& plan,
                           const PredictorConfig& cfg, const costs::CostConfig* cost,
                           std::size_t n, std::uint64_t seed,
                           const SceneSampler* scene = nullptr,
                           bool want_collisions = false);

struct CostSampleRequest {
  WorldHistory history;
  EgoPlan plan;
  int tau = 1;  // lookahead step in [1, horizon]
  std::size_t n = 2;
  costs::CostConfig cost;
  PredictorConfig predictor;
  std::uint64_t seed = 0;
};

/// n i.i.d. draws from the cost distribution at lookahead tau; output order
/// matches the rollout substream index.
std::vector<double> cost_samples(const CostSampleRequest& req,
                                 const SceneSampler* scene = nullptr);

}  // namespace scenrisk::predict

#endif  // SCENRISK_PREDICT_HPP
