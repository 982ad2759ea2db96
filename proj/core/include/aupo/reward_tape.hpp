#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "aupo/mdp.hpp"

namespace aupo {

/// Layerwise reward samples per root action.
///
/// For every recorded trajectory starting with action j, depth d in 1..D
/// receives reward r_d, or 0 when the trajectory ended before d, so all
/// layers of one action have the same length. The truncated return
/// r_1 + ... + r_min(D, len) and the full (discounted) return are kept too.
class RewardTape {
 public:
  RewardTape() = default;
  RewardTape(std::size_t num_actions, std::size_t depth);

  /// Pre-allocates room for `per_action` samples of every action.
  void reserve(std::size_t per_action);

  /// A zero-depth tape records nothing.
  bool enabled() const { return depth_ > 0; }

  /// Throws std::invalid_argument if `rewards` is empty or `action` is out
  /// of range.
  void record(ActionId action, std::span<const double> rewards,
              double discount = 1.0);

  std::size_t depth() const { return depth_; }
  std::size_t num_actions() const { return actions_; }
  std::size_t samples(ActionId action) const { return truncated_[action].size(); }
  std::size_t total_samples() const;

  /// Rewards at depth d (1-based) after playing `action` at the root.
  std::span<const double> layer(ActionId action, std::size_t d) const {
    return layers_[action * depth_ + (d - 1)];
  }
  std::span<const double> truncated_returns(ActionId action) const {
    return truncated_[action];
  }
  std::span<const double> full_returns(ActionId action) const {
    return full_[action];
  }

 private:
  std::size_t actions_ = 0;
  std::size_t depth_ = 0;
  std::vector<std::vector<double>> layers_;  // [action * depth + d - 1]
  std::vector<std::vector<double>> truncated_;
  std::vector<std::vector<double>> full_;
};

}  // namespace aupo
