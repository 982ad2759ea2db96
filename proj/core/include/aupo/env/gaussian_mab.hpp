#pragma once

#include <string>
#include <vector>

#include "aupo/mdp.hpp"

namespace aupo {

struct MabState {
  bool pulled = false;
  bool operator==(const MabState&) const = default;
};

/// One-step MDP: every arm pull ends the episode with a Gaussian reward.
class GaussianMab {
 public:
  using State = MabState;

  GaussianMab(std::vector<double> means, std::vector<double> stds,
              EpisodeLimits limits = {});

  int horizon() const { return limits_.horizon; }
  double discount() const { return limits_.discount; }
  std::string name() const { return "gaussian_mab"; }

  State initial_state(Rng&) const { return {}; }
  std::size_t num_actions(const State&) const { return means_.size(); }
  Transition<State> step(const State& state, ActionId arm, Rng& rng) const;
  bool same_state(const State& a, const State& b) const { return a == b; }

  std::size_t arms() const { return means_.size(); }
  const std::vector<double>& means() const { return means_; }
  const std::vector<double>& stds() const { return stds_; }

 private:
  std::vector<double> means_;
  std::vector<double> stds_;
  EpisodeLimits limits_;
};

GaussianMab make_gaussian_mab(std::vector<double> means,
                              std::vector<double> stds,
                              EpisodeLimits limits = {});

}  // namespace aupo
