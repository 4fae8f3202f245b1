#include "scenrisk/risk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scenrisk::stats {

double dkw_epsilon(double alpha, std::size_t n) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("dkw_epsilon: alpha must lie in (0, 1)");
  if (n == 0) throw std::invalid_argument("dkw_epsilon: n must be positive");
  return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(n)));
}

std::pair<double, double> frechet_bounds(double u, double v) {
  if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0))
    throw std::invalid_argument("frechet_bounds: arguments must lie in [0, 1]");
  return {std::max(u + v - 1.0, 0.0), std::min(u, v)};
}

std::pair<double, double> v_bounds(const Ecdf& ecdf_a, const Ecdf& ecdf_b, double p,
                                   double alpha) {
  if (ecdf_a.n() != ecdf_b.n())
    throw std::invalid_argument("v_bounds: sample counts must match");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("v_bounds: p must lie in (0, 1)");
  const double eps = dkw_epsilon(alpha, ecdf_a.n());

  // Generalized inverses of the shifted empirical CDFs:
  // inf{c : Phi_A(c) - eps >= p} = quantile_A(p + eps) and
  // inf{c : Phi_A(c) + eps >= p} = quantile_A(p - eps).
  // The upper band's argument is capped at 1 so it evaluates at the largest
  // sample instead of the empty-set infimum +inf, which would always yield a
  // vacuous v_high of 1 once p + eps exceeds 1.
  const double hi_arg = ecdf_a.quantile(std::min(p + eps, 1.0));
  const double lo_arg = ecdf_a.quantile(p - eps);

  double v_high = ecdf_b.eval(hi_arg) + eps;
  double v_low = ecdf_b.eval(lo_arg) - eps;
  v_high = std::clamp(v_high, 0.0, 1.0);
  v_low = std::clamp(v_low, 0.0, 1.0);
  if (v_low > v_high) v_low = v_high;
  return {v_low, v_high};
}

RiskBounds rsr_bounds(std::span<const double> samples_a, std::span<const double> samples_b,
                      double p, double alpha) {
  if (samples_a.size() != samples_b.size())
    throw std::invalid_argument("rsr_bounds: sample counts must match");
  if (samples_a.size() < 2) throw std::invalid_argument("rsr_bounds: need n >= 2");
  const Ecdf ecdf_a{samples_a};
  const Ecdf ecdf_b{samples_b};
  const auto [v_low, v_high] = v_bounds(ecdf_a, ecdf_b, p, alpha);

  RiskBounds out;
  out.epsilon = dkw_epsilon(alpha, samples_a.size());
  out.v_low = v_low;
  out.v_high = v_high;
  out.lower = 1.0 - std::min(p, v_high) / p;
  out.upper = 1.0 - std::max(p + v_low - 1.0, 0.0) / p;
  out.lower = std::clamp(out.lower, 0.0, 1.0);
  out.upper = std::clamp(out.upper, 0.0, 1.0);
  if (out.lower > out.upper) out.lower = out.upper;
  return out;
}

DetectorParams::DetectorParams(double p_, double gamma_, double alpha_, std::size_t n_)
    : p(p_), gamma(gamma_), alpha(alpha_), n(n_) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("DetectorParams: p must lie in (0, 1)");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("DetectorParams: gamma must lie in (0, 1)");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("DetectorParams: alpha must lie in (0, 1)");
  if (n < 2) throw std::invalid_argument("DetectorParams: n must be >= 2");
}

bool detect(std::span<const double> samples_a, std::span<const double> samples_b,
            const DetectorParams& params) {
  if (samples_a.size() != params.n || samples_b.size() != params.n)
    throw std::invalid_argument("detect: sample counts must equal params.n");
  const Ecdf ecdf_a{samples_a};
  const Ecdf ecdf_b{samples_b};
  const auto [v_low, v_high] = v_bounds(ecdf_a, ecdf_b, params.p, params.alpha);
  (void)v_low;
  return std::min(params.p, v_high) < params.p * (1.0 - params.gamma);
}

}  // namespace scenrisk::stats
