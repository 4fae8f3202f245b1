#ifndef SCENRISK_RNG_HPP
#define SCENRISK_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace scenrisk {

/// Seeded random stream with deterministic, platform-stable draws.
///
/// The engine is std::mt19937_64 (bit-exact by the standard); all
/// distributions are sampled explicitly from raw 64-bit words instead of
/// going through std::*_distribution, whose output is
/// implementation-defined. Substreams are derived by key mixing, so
/// sample i of a batch can be generated independently of samples 0..i-1.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed)
      : seed_key_(mix(seed)), engine_(mix(mix(seed))) {}

  /// Derive an independent substream keyed by (this seed, keys...).
  /// Same keys, same substream; distinct keys give decorrelated streams.
  RandomStream substream(std::initializer_list<std::uint64_t> keys) const {
    std::uint64_t h = seed_key_;
    for (std::uint64_t k : keys) h = mix(h ^ mix(k));
    RandomStream s;
    s.seed_key_ = h;
    s.engine_.seed(mix(h));
    return s;
  }

  RandomStream substream(std::uint64_t key) const { return substream({key}); }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on (0, 1]; never returns 0 so it is safe under log().
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(next_u64() >> 11) * 0x1.0p-53);
  }

  /// Standard normal via Box-Muller; one value per call (no cached spare,
  /// keeps the draw count predictable).
  double normal() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi_ * u2);
  }

  double normal(double mean, double std_dev) { return mean + std_dev * normal(); }

  /// Bernoulli with success probability p.
  bool bernoulli(double p) { return uniform01() <= p; }

  /// Index drawn from a categorical distribution; weights need not be
  /// normalized but must be non-negative with a positive sum.
  std::size_t categorical(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) {
      if (w < 0.0) throw std::invalid_argument("categorical: negative weight");
      total += w;
    }
    if (total <= 0.0) throw std::invalid_argument("categorical: zero total weight");
    double u = uniform01() * total;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      u -= weights[i];
      if (u <= 0.0) return i;
    }
    return weights.size() - 1;
  }

 private:
  static constexpr double pi_ = 3.141592653589793238462643383279502884;

  // splitmix64 finalizer; good avalanche for key derivation.
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  RandomStream() : engine_(0) {}

  std::uint64_t seed_key_ = 0;
  std::mt19937_64 engine_;
};

}  // namespace scenrisk

#endif  // SCENRISK_RNG_HPP
