#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "aupo/theory.hpp"

namespace aupo::harness {

inline constexpr const char* kTheoryHeader =
    "experiment,mu_gap,sigma_left,sigma_right,n,q,depth,exact,mc_estimate,bound";

struct OverlapPoint {
  LayerPair pair;
  std::size_t n = 1;
  double q = 0.95;
};

/// 24 points: gaps {0, 0.3, 1} x sigmas {(1,1), (0.5,1.5)} x n {10, 50}
/// x q {0.9, 0.99}.
std::vector<OverlapPoint> overlap_grid();

struct TheoryRecord {
  std::string experiment;
  double mu_gap = 0.0;
  double sigma_left = 1.0;
  double sigma_right = 1.0;
  std::size_t n = 1;
  double q = 0.95;
  std::size_t depth = 1;
  double exact = 0.0;
  double mc_estimate = 0.0;
  double bound = 0.0;
};

/// Every layer shares the gap and both sigmas.
LayeredGaussianSpec two_action_spec(double mu_gap, double sigma_left, double sigma_right,
                                    std::size_t depth);

/// Overlap grid, grouping of identical actions, and soundness decay rows.
std::vector<TheoryRecord> run_theory(std::size_t trials, std::uint64_t seed);

void write_theory(std::ostream& out, const std::vector<TheoryRecord>& records);

}  // namespace aupo::harness
