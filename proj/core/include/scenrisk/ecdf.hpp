#ifndef SCENRISK_ECDF_HPP
#define SCENRISK_ECDF_HPP

#include <span>
#include <vector>

namespace scenrisk::stats {

/// Empirical CDF over a finite sample multiset.
/// eval(x) = (#samples <= x)/n (right-continuous step function);
/// quantile(q) = inf{c : eval(c) >= q}, with -inf for q <= 0 and +inf for
/// q > 1 (the infimum of an empty set).
class Ecdf {
 public:
  /// Sorts a copy of the values. Throws std::invalid_argument on an empty
  /// set or any non-finite value.
  explicit Ecdf(std::span<const double> values);

  std::size_t n() const { return samples_.size(); }
  const std::vector<double>& samples() const { return samples_; }

  double eval(double x) const;
  double quantile(double q) const;

 private:
  std::vector<double> samples_;  // ascending
};

}  // namespace scenrisk::stats

#endif  // SCENRISK_ECDF_HPP
