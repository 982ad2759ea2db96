#pragma once

#include <span>

#include "aupo/abstraction.hpp"

namespace aupo {

struct RandomAbsParams {
  double p_random = 0.5;

  void validate() const;
};

/// Groups every unordered pair of visited root actions independently with
/// probability p_random. At p = 0 or 1 no randomness is drawn.
AbstractionResult random_abstraction(std::span<const ActionStats> root,
                                     const RandomAbsParams& params, Rng& rng);

/// RANDOM-ABS control: AUPO's two-step decision over a random grouping.
ActionId random_abs_decide(std::span<const ActionStats> root,
                           const RandomAbsParams& params, Rng& rng);

template <class State>
ActionId random_abs_decide(const SearchTree<State>& tree,
                           const RandomAbsParams& params, Rng& rng) {
  const auto stats = tree.root_stats();
  return random_abs_decide(std::span<const ActionStats>(stats), params, rng);
}

}  // namespace aupo
