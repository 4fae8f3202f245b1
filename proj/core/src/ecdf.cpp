#include "scenrisk/ecdf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace scenrisk::stats {

Ecdf::Ecdf(std::span<const double> values) : samples_(values.begin(), values.end()) {
  if (samples_.empty()) throw std::invalid_argument("Ecdf: empty sample set");
  for (double v : samples_)
    if (!std::isfinite(v)) throw std::invalid_argument("Ecdf: non-finite sample");
  std::sort(samples_.begin(), samples_.end());
}

double Ecdf::eval(double x) const {
  if (std::isnan(x)) throw std::invalid_argument("Ecdf::eval: NaN query");
  // upper_bound gives the count of samples <= x (also correct at x = +/-inf).
  const auto it = std::upper_bound(samples_.begin(), samples_.end(), x);
  return static_cast<double>(it - samples_.begin()) / static_cast<double>(samples_.size());
}

double Ecdf::quantile(double q) const {
  if (std::isnan(q)) throw std::invalid_argument("Ecdf::quantile: NaN query");
  if (q <= 0.0) return -std::numeric_limits<double>::infinity();
  if (q > 1.0) return std::numeric_limits<double>::infinity();
  // Smallest k with k/n >= q, evaluated exactly in double arithmetic so the
  // Galois property quantile(q) <= x  <=>  q <= eval(x) holds bit-for-bit.
  const std::size_t n = samples_.size();
  std::size_t lo = 1, hi = n;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (static_cast<double>(mid) / static_cast<double>(n) >= q)
      hi = mid;
    else
      lo = mid + 1;
  }
  return samples_[lo - 1];
}

}  // namespace scenrisk::stats
