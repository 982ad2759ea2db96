#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "aupo/env/layered_gaussian.hpp"
#include "aupo/rng.hpp"

namespace aupo {

/// Gaussian reward distributions of one layer for two root actions.
struct LayerPair {
  double mu_left = 0.0;
  double mu_right = 0.0;
  double sigma_left = 1.0;
  double sigma_right = 1.0;
};

struct BoundParams {
  std::vector<LayerPair> layers;
  std::size_t n = 1;   // samples per action
  double q = 0.95;
  double epsilon = 0.01;
};

/// Probability that the known-sigma mean intervals of n samples per side
/// overlap: P(|X̄ - Ȳ| <= z*(q)(σ_X + σ_Y)/√n) with
/// X̄ - Ȳ ~ N(μ_X - μ_Y, (σ_X² + σ_Y²)/n). Throws std::domain_error unless
/// 0 < q < 1 and n >= 1.
double overlap_probability_exact(const LayerPair& pair, std::size_t n, double q);

/// The same expression with the difference's std taken as (σ_X + σ_Y)/√n.
/// Equals q exactly for equal means; it is not the sampling probability.
double overlap_probability_summed_sigma(const LayerPair& pair, std::size_t n,
                                        double q);

/// Fraction of `trials` in which n raw Gaussian samples per side give
/// overlapping known-sigma mean intervals.
double overlap_probability_mc(const LayerPair& pair, std::size_t n, double q,
                              std::size_t trials, Rng& rng);

/// Product of the per-layer exact overlap probabilities (mean intervals
/// only, independent layers).
double abstraction_probability_exact(const BoundParams& params);

/// Per-layer exponent weights: (μΔ)² / (2(σ_l + σ_r)²) for a layer whose
/// gap is at least z*(σ_l + σ_r)/√n, 0 otherwise (that factor is bounded
/// by 1).
std::vector<double> bound_weights(const BoundParams& params);

/// exp(-n (ε + Σ w_i)).
double theorem_bound(const BoundParams& params);

struct AbstractionSimOptions {
  /// Also require the return intervals (sum over layers) to overlap.
  bool return_filter = false;
  /// Draw every raw sample instead of each sample mean from its exact
  /// N(μ, σ²/n) sampling distribution.
  bool raw_samples = false;
};

/// Monte Carlo frequency with which two actions with the given layered
/// Gaussian columns (exactly 2 actions) are grouped after n plays each,
/// using known-sigma mean intervals at every layer.
double simulate_aupo_abstraction(const LayeredGaussianSpec& spec, std::size_t n,
                                 double q, std::size_t trials, Rng& rng,
                                 AbstractionSimOptions options = {});

struct SelectionBias {
  double p_max_geq_c = 0.0;
  double var_of_mean = 0.0;
};

/// (1 - cdf_at_c^k, Σ variances / k²).
SelectionBias selection_bias_stats(std::size_t k, double cdf_at_c,
                                   std::span<const double> variances);

struct MaxOverestimationSample {
  double mean_single = 0.0;   // empirical mean of one copy
  double mean_of_max = 0.0;   // empirical mean of max over k copies
  double p_max_geq_c = 0.0;
  double var_of_mean = 0.0;   // empirical variance of the k-copy mean
};

/// Draws `trials` sets of k i.i.d. N(0, 1) Q estimates.
MaxOverestimationSample simulate_max_overestimation(std::size_t k, double c,
                                                    std::size_t trials, Rng& rng);

}  // namespace aupo
