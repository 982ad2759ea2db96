#include "aupo/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "aupo/stats.hpp"

namespace aupo {

namespace {

void check(std::size_t n, double q) {
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("q must lie in (0, 1)");
  if (n < 1) throw std::domain_error("n must be >= 1");
}

// P(|Z| <= t) for Z ~ N(mu, sigma²), evaluated through upper tails so that
// tiny probabilities keep their relative accuracy.
double prob_abs_within(double mu, double sigma, double t) {
  const double m = std::abs(mu);
  const double u = (m - t) / (sigma * std::numbers::sqrt2);
  const double v = (m + t) / (sigma * std::numbers::sqrt2);
  return 0.5 * (std::erfc(u) - std::erfc(v));
}

double threshold(const LayerPair& pair, std::size_t n, double q) {
  return critical_value(q) * (pair.sigma_left + pair.sigma_right) /
         std::sqrt(static_cast<double>(n));
}

}  // namespace

double overlap_probability_exact(const LayerPair& pair, std::size_t n, double q) {
  check(n, q);
  const double sigma_z =
      std::sqrt(pair.sigma_left * pair.sigma_left + pair.sigma_right * pair.sigma_right) /
      std::sqrt(static_cast<double>(n));
  return prob_abs_within(pair.mu_left - pair.mu_right, sigma_z, threshold(pair, n, q));
}

double overlap_probability_summed_sigma(const LayerPair& pair, std::size_t n,
                                        double q) {
  check(n, q);
  const double sigma_z =
      (pair.sigma_left + pair.sigma_right) / std::sqrt(static_cast<double>(n));
  return prob_abs_within(pair.mu_left - pair.mu_right, sigma_z, threshold(pair, n, q));
}

double overlap_probability_mc(const LayerPair& pair, std::size_t n, double q,
                              std::size_t trials, Rng& rng) {
  check(n, q);
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  std::size_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t i = 0; i < n; ++i) sx += rng.normal(pair.mu_left, pair.sigma_left);
    for (std::size_t i = 0; i < n; ++i) sy += rng.normal(pair.mu_right, pair.sigma_right);
    const auto a = known_sigma_mean_interval(sx / double(n), pair.sigma_left, n, q);
    const auto b = known_sigma_mean_interval(sy / double(n), pair.sigma_right, n, q);
    if (intervals_overlap(a, b)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

double abstraction_probability_exact(const BoundParams& params) {
  double p = 1.0;
  for (const auto& layer : params.layers) {
    p *= overlap_probability_exact(layer, params.n, params.q);
  }
  return p;
}

std::vector<double> bound_weights(const BoundParams& params) {
  check(params.n, params.q);
  std::vector<double> w;
  w.reserve(params.layers.size());
  for (const auto& layer : params.layers) {
    const double gap = std::abs(layer.mu_left - layer.mu_right);
    const double spread = layer.sigma_left + layer.sigma_right;
    if (gap >= threshold(layer, params.n, params.q)) {
      w.push_back(gap * gap / (2.0 * spread * spread));
    } else {
      w.push_back(0.0);
    }
  }
  return w;
}

double theorem_bound(const BoundParams& params) {
  double exponent = params.epsilon;
  for (double w : bound_weights(params)) exponent += w;
  return std::exp(-static_cast<double>(params.n) * exponent);
}

double simulate_aupo_abstraction(const LayeredGaussianSpec& spec, std::size_t n,
                                 double q, std::size_t trials, Rng& rng,
                                 AbstractionSimOptions options) {
  spec.validate();
  check(n, q);
  if (spec.actions() != 2) throw std::invalid_argument("simulation needs two actions");
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  const std::size_t depth = spec.depth();
  const double root_n = std::sqrt(static_cast<double>(n));

  // Known std of a trajectory's truncated return for each action.
  double return_sigma[2] = {0.0, 0.0};
  for (std::size_t a = 0; a < 2; ++a) {
    double var = 0.0;
    for (std::size_t d = 0; d < depth; ++d) var += spec.stds[d][a] * spec.stds[d][a];
    return_sigma[a] = std::sqrt(var);
  }

  auto sample_mean = [&](double mu, double sigma) {
    if (!options.raw_samples) return rng.normal(mu, sigma / root_n);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += rng.normal(mu, sigma);
    return sum / static_cast<double>(n);
  };

  std::size_t grouped = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    bool overlap = true;
    double return_mean[2] = {0.0, 0.0};
    for (std::size_t d = 0; d < depth; ++d) {
      double means[2];
      for (std::size_t a = 0; a < 2; ++a) {
        means[a] = sample_mean(spec.means[d][a], spec.stds[d][a]);
        return_mean[a] += means[a];
      }
      if (overlap &&
          !intervals_overlap(known_sigma_mean_interval(means[0], spec.stds[d][0], n, q),
                             known_sigma_mean_interval(means[1], spec.stds[d][1], n, q))) {
        overlap = false;
      }
    }
    if (overlap && options.return_filter) {
      overlap = intervals_overlap(
          known_sigma_mean_interval(return_mean[0], return_sigma[0], n, q),
          known_sigma_mean_interval(return_mean[1], return_sigma[1], n, q));
    }
    if (overlap) ++grouped;
  }
  return static_cast<double>(grouped) / static_cast<double>(trials);
}

SelectionBias selection_bias_stats(std::size_t k, double cdf_at_c,
                                   std::span<const double> variances) {
  if (k < 1 || variances.size() != k) {
    throw std::invalid_argument("selection bias needs k >= 1 variances");
  }
  double total = 0.0;
  for (double v : variances) total += v;
  const double kk = static_cast<double>(k);
  return {1.0 - std::pow(cdf_at_c, kk), total / (kk * kk)};
}

MaxOverestimationSample simulate_max_overestimation(std::size_t k, double c,
                                                    std::size_t trials, Rng& rng) {
  if (k < 1 || trials < 2) throw std::invalid_argument("need k >= 1 and trials >= 2");
  double sum_single = 0.0;
  double sum_max = 0.0;
  std::size_t above = 0;
  double mean_acc = 0.0;
  double m2 = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    double best = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double x = rng.normal();
      if (i == 0) sum_single += x;
      best = std::max(best, x);
      sum += x;
    }
    sum_max += best;
    if (best >= c) ++above;
    const double mean = sum / static_cast<double>(k);
    const double delta = mean - mean_acc;
    mean_acc += delta / static_cast<double>(t + 1);
    m2 += delta * (mean - mean_acc);
  }
  const double n = static_cast<double>(trials);
  return {sum_single / n, sum_max / n, static_cast<double>(above) / n, m2 / (n - 1.0)};
}

}  // namespace aupo
