#include "scenrisk/baselines.hpp"

#include <stdexcept>

namespace scenrisk::baselines {

BaselineParams::BaselineParams(double gamma_, std::size_t n_) : gamma(gamma_), n(n_) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("BaselineParams: gamma must lie in (0, 1)");
  if (n < 2) throw std::invalid_argument("BaselineParams: n must be >= 2");
}

double collision_probability(const WorldHistory& history, const EgoPlan& plan,
                             const predict::PredictorConfig& predictor, std::size_t n,
                             std::uint64_t seed, const predict::SceneSampler* scene) {
  if (n < 2) throw std::invalid_argument("collision_probability: need n >= 2");
  const auto batch = predict::rollout_batch(history, plan, predictor, nullptr, n, seed,
                                            scene, /*want_collisions=*/true);
  double hits = 0.0;
  for (std::uint8_t c : batch.collided) hits += c;
  return hits / static_cast<double>(n);
}

}  // namespace scenrisk::baselines
