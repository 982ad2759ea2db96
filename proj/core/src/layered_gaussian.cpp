#include "aupo/env/layered_gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace aupo {

void LayeredGaussianSpec::validate() const {
  if (means.empty() || means.size() != stds.size()) {
    throw std::invalid_argument("layered spec needs matching non-empty means/stds");
  }
  const std::size_t n = means.front().size();
  if (n == 0) throw std::invalid_argument("layered spec needs at least one action");
  for (std::size_t d = 0; d < means.size(); ++d) {
    if (means[d].size() != n || stds[d].size() != n) {
      throw std::invalid_argument("layered spec rows differ in width");
    }
    for (double s : stds[d]) {
      if (!(s > 0.0) || !std::isfinite(s)) {
        throw std::invalid_argument("layered spec stds must be positive");
      }
    }
  }
}

LayeredGaussian::LayeredGaussian(LayeredGaussianSpec spec, EpisodeLimits limits)
    : spec_(std::move(spec)), limits_(limits) {
  spec_.validate();
  if (limits_.horizon < static_cast<int>(spec_.depth())) {
    throw std::invalid_argument("horizon shorter than layered spec depth");
  }
}

Transition<LayeredState> LayeredGaussian::step(const State& state,
                                               ActionId action, Rng& rng) const {
  if (action >= num_actions(state)) throw ContractViolation("no such layered action");
  Transition<State> out;
  out.next.root_action =
      state.depth == 0 ? static_cast<int>(action) : state.root_action;
  out.next.depth = state.depth + 1;
  const auto layer = static_cast<std::size_t>(state.depth);
  if (layer < spec_.depth()) {
    const auto a = static_cast<std::size_t>(out.next.root_action);
    out.reward = rng.normal(spec_.means[layer][a], spec_.stds[layer][a]);
  }
  out.terminal = false;
  return out;
}

LayeredGaussian make_layered_gaussian(LayeredGaussianSpec spec, int horizon) {
  return LayeredGaussian(std::move(spec), EpisodeLimits{horizon, 1.0});
}

}  // namespace aupo
