#pragma once

#include <string>
#include <vector>

#include "aupo/mdp.hpp"

namespace aupo {

/// Per-depth Gaussian reward parameters for each root action.
/// `means[d][a]` and `stds[d][a]` describe the reward at depth d + 1.
struct LayeredGaussianSpec {
  std::vector<std::vector<double>> means;
  std::vector<std::vector<double>> stds;

  std::size_t depth() const { return means.size(); }
  std::size_t actions() const { return means.empty() ? 0 : means.front().size(); }
  /// Throws std::invalid_argument on shape mismatch or a non-positive std.
  void validate() const;
};

struct LayeredState {
  int root_action = -1;
  int depth = 0;
  bool operator==(const LayeredState&) const = default;
};

/// Chain MDP realising independent layerwise Gaussian rewards: the root
/// action is remembered and fixes the distribution of every later reward.
/// Non-root states have a single "continue" action; rewards past the spec
/// depth are 0 and episodes end by horizon only.
class LayeredGaussian {
 public:
  using State = LayeredState;

  LayeredGaussian(LayeredGaussianSpec spec, EpisodeLimits limits = {});

  int horizon() const { return limits_.horizon; }
  double discount() const { return limits_.discount; }
  std::string name() const { return "layered_gaussian"; }

  State initial_state(Rng&) const { return {}; }
  std::size_t num_actions(const State& state) const {
    return state.depth == 0 ? spec_.actions() : 1;
  }
  Transition<State> step(const State& state, ActionId action, Rng& rng) const;
  bool same_state(const State& a, const State& b) const { return a == b; }

  const LayeredGaussianSpec& spec() const { return spec_; }

 private:
  LayeredGaussianSpec spec_;
  EpisodeLimits limits_;
};

LayeredGaussian make_layered_gaussian(LayeredGaussianSpec spec, int horizon);

}  // namespace aupo
