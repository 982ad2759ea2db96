#include "aupo/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace aupo {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

namespace {

double acklam_quantile(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    throw std::domain_error("normal_quantile needs p in [0, 1]");
  }
  double x = acklam_quantile(p);
  // One Halley step on Φ(x) - p, evaluated through the nearer tail.
  const double e = p < 0.5 ? normal_cdf(x) - p
                           : (1.0 - p) - 0.5 * std::erfc(x / std::numbers::sqrt2);
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

double critical_value(double q) {
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("critical_value needs q in (0, 1)");
  // Φ(z) = (1 + q) / 2, evaluated through the upper tail (1 - q) / 2.
  return -normal_quantile(0.5 * (1.0 - q));
}

bool intervals_overlap(const Interval& a, const Interval& b) {
  return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi);
}

SampleMoments SampleMoments::of(std::span<const double> samples) {
  SampleMoments m;
  double m2 = 0.0;
  for (double x : samples) {
    ++m.count;
    const double delta = x - m.mean;
    m.mean += delta / static_cast<double>(m.count);
    m2 += delta * (x - m.mean);
  }
  if (m.count >= 2) m.stddev = std::sqrt(std::max(0.0, m2 / double(m.count - 1)));
  return m;
}

namespace {

void require_samples(const SampleMoments& m) {
  if (m.count == 0) throw std::invalid_argument("confidence interval of empty sample");
}

}  // namespace

Interval mean_conf_interval(const SampleMoments& m, double q) {
  require_samples(m);
  if (q <= 0.0) return Interval::point(m.mean);
  if (q >= 1.0 || m.count < 2) return Interval::whole();
  const double half = critical_value(q) * m.stddev / std::sqrt(double(m.count));
  return {m.mean - half, m.mean + half};
}

Interval mean_conf_interval(std::span<const double> samples, double q) {
  return mean_conf_interval(SampleMoments::of(samples), q);
}

Interval std_conf_interval(const SampleMoments& m, double q) {
  require_samples(m);
  if (q <= 0.0) return Interval::point(m.stddev);
  if (q >= 1.0 || m.count < 2) return Interval::whole();
  const double half = critical_value(q) * m.stddev / std::sqrt(2.0 * double(m.count));
  return {std::max(0.0, m.stddev - half), m.stddev + half};
}

Interval std_conf_interval(std::span<const double> samples, double q) {
  return std_conf_interval(SampleMoments::of(samples), q);
}

Interval known_sigma_mean_interval(double mean, double sigma, std::size_t n,
                                   double q) {
  if (n == 0) throw std::invalid_argument("known-sigma interval needs n >= 1");
  if (q <= 0.0) return Interval::point(mean);
  if (q >= 1.0) return Interval::whole();
  const double half = critical_value(q) * sigma / std::sqrt(double(n));
  return {mean - half, mean + half};
}

}  // namespace aupo
