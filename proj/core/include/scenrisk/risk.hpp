#ifndef SCENRISK_RISK_HPP
#define SCENRISK_RISK_HPP

#include <span>
#include <utility>

#include "scenrisk/ecdf.hpp"

namespace scenrisk::stats {

/// Uniform confidence half-width sqrt(ln(2/alpha) / (2n)) for an empirical
/// CDF estimated from n i.i.d. samples at confidence 1 - alpha.
double dkw_epsilon(double alpha, std::size_t n);

/// Universal copula envelope: W = max{u+v-1, 0} and M = min{u, v}.
/// Any bivariate copula satisfies W <= C <= M.
std::pair<double, double> frechet_bounds(double u, double v);

/// Two-sided band on v = Phi_B(Phi_A^{-1}(p)) computed from empirical CDFs:
/// v_high = Phi_B(quantile_A(min(p + eps, 1))) + eps,
/// v_low  = Phi_B(quantile_A(p - eps)) - eps,
/// both clamped to [0, 1]. Throws if sample counts differ (the guarantee
/// assumes equal n) or parameters leave (0, 1).
std::pair<double, double> v_bounds(const Ecdf& ecdf_a, const Ecdf& ecdf_b, double p,
                                   double alpha);

/// High-confidence envelope on the conditional exceedance probability
/// Pr(B > theta | A <= theta) at theta = the p-quantile of A.
struct RiskBounds {
  double lower = 0.0;
  double upper = 1.0;
  double epsilon = 0.0;
  double v_low = 0.0;
  double v_high = 1.0;
};

/// With probability >= 1 - alpha over the sampling of A and B:
/// lower <= Pr(B > theta | A <= theta) <= upper.
RiskBounds rsr_bounds(std::span<const double> samples_a, std::span<const double> samples_b,
                      double p, double alpha);

struct DetectorParams {
  double p = 0.99;      // risk-aversion quantile, in (0, 1)
  double gamma = 0.9;   // alarm threshold on the risk lower bound, in (0, 1)
  double alpha = 0.1;   // 1 - confidence, in (0, 1)
  std::size_t n = 1000;  // samples per scene, >= 2

  DetectorParams() = default;
  DetectorParams(double p_, double gamma_, double alpha_, std::size_t n_);
};

/// Alarm test: true iff min{p, v_high} < p * (1 - gamma), i.e. the risk
/// lower bound exceeds gamma. Sample counts must both equal params.n.
bool detect(std::span<const double> samples_a, std::span<const double> samples_b,
            const DetectorParams& params);

}  // namespace scenrisk::stats

#endif  // SCENRISK_RISK_HPP
