#include "aupo/env/gaussian_mab.hpp"

#include <cmath>
#include <stdexcept>

namespace aupo {

GaussianMab::GaussianMab(std::vector<double> means, std::vector<double> stds,
                         EpisodeLimits limits)
    : means_(std::move(means)), stds_(std::move(stds)), limits_(limits) {
  if (means_.empty()) throw std::invalid_argument("bandit needs at least one arm");
  if (means_.size() != stds_.size()) {
    throw std::invalid_argument("bandit means and stds differ in length");
  }
  for (double s : stds_) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
      throw std::invalid_argument("bandit arm std must be finite and >= 0");
    }
  }
}

Transition<MabState> GaussianMab::step(const State& state, ActionId arm,
                                       Rng& rng) const {
  if (state.pulled) throw ContractViolation("bandit episode already ended");
  if (arm >= means_.size()) throw ContractViolation("no such arm");
  const double reward =
      stds_[arm] > 0.0 ? rng.normal(means_[arm], stds_[arm]) : means_[arm];
  return {MabState{true}, reward, true};
}

GaussianMab make_gaussian_mab(std::vector<double> means,
                              std::vector<double> stds, EpisodeLimits limits) {
  return GaussianMab(std::move(means), std::move(stds), limits);
}

}  // namespace aupo
