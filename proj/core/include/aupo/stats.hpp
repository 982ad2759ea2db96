#pragma once

#include <cstddef>
#include <limits>
#include <span>

namespace aupo {

/// Standard normal CDF Φ(x).
double normal_cdf(double x);

/// Inverse of Φ for p in (0, 1). Acklam's rational approximation refined
/// by one Halley step; absolute error below 1e-12 across the domain.
double normal_quantile(double p);

/// Two-sided critical value z* with Φ(z*) - Φ(-z*) = q, for q in (0, 1).
double critical_value(double q);

/// Closed interval over the extended reals.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval whole() {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {-inf, inf};
  }
  static Interval point(double x) { return {x, x}; }

  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool operator==(const Interval&) const = default;
};

/// Touching endpoints count as overlap.
bool intervals_overlap(const Interval& a, const Interval& b);

/// Count, mean and Bessel-corrected standard deviation of a sample.
struct SampleMoments {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // 0 when count < 2

  static SampleMoments of(std::span<const double> samples);
};

/// Gaussian interval for the mean: q = 0 gives the point {mean}, q = 1 the
/// whole line, otherwise mean ± z*(q)·s/√n. Fewer than two samples give the
/// whole line for q > 0. Throws std::invalid_argument on an empty sample.
Interval mean_conf_interval(std::span<const double> samples, double q);
Interval mean_conf_interval(const SampleMoments& m, double q);

/// Large-sample interval for the standard deviation, s ± z*(q)·s/√(2n),
/// floored at 0, with the same degenerate cases as the mean interval.
Interval std_conf_interval(std::span<const double> samples, double q);
Interval std_conf_interval(const SampleMoments& m, double q);

/// Mean interval with a known population std (mean ± z*·σ/√n).
Interval known_sigma_mean_interval(double mean, double sigma, std::size_t n,
                                   double q);

}  // namespace aupo
