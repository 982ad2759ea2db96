#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace aupo {

/// SplitMix64 finalizer. Used to derive independent engine seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seeded random source shared by environments and search.
///
/// Streams are splittable: `Rng::substream(base, i)` depends only on
/// (base, i), so episode i draws the same numbers whichever thread runs it.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed = 0);

  static Rng substream(std::uint64_t base_seed, std::uint64_t index);

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform();
  bool bernoulli(double p);
  double normal();
  double normal(double mean, double stddev);
  /// Uniform integer in [0, n). n must be positive.
  std::size_t below(std::size_t n);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> gauss_;
};

}  // namespace aupo
