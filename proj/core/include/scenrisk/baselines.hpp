#ifndef SCENRISK_BASELINES_HPP
#define SCENRISK_BASELINES_HPP

#include "scenrisk/predict.hpp"

namespace scenrisk::baselines {

struct BaselineParams {
  double gamma = 0.9;    // probability threshold, in (0, 1)
  std::size_t n = 1000;  // rollout count, >= 2

  BaselineParams() = default;
  BaselineParams(double gamma_, std::size_t n_);
};

/// Fraction of n Monte-Carlo rollouts in which the ego footprint collides
/// with any agent at any step of the horizon. `scene` optionally overrides
/// the scene per rollout (same contract as predict::rollout_batch).
double collision_probability(const WorldHistory& history, const EgoPlan& plan,
                             const predict::PredictorConfig& predictor, std::size_t n,
                             std::uint64_t seed,
                             const predict::SceneSampler* scene = nullptr);

/// Alarm rule: the corrected scene must be both riskier than the perceived
/// scene and above the absolute threshold.
inline bool baseline_detect(double p_perceived, double p_plausible,
                            const BaselineParams& params) {
  return p_plausible > p_perceived && p_plausible > params.gamma;
}

}  // namespace scenrisk::baselines

#endif  // SCENRISK_BASELINES_HPP
