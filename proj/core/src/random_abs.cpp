#include "aupo/random_abs.hpp"

#include <stdexcept>
#include <vector>

namespace aupo {

void RandomAbsParams::validate() const {
  if (!(p_random >= 0.0 && p_random <= 1.0)) {
    throw std::invalid_argument("p_random must lie in [0, 1]");
  }
}

AbstractionResult random_abstraction(std::span<const ActionStats> root,
                                     const RandomAbsParams& params, Rng& rng) {
  params.validate();
  const std::size_t n = root.size();
  std::vector<std::uint8_t> pair(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!root[i].visited()) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!root[j].visited()) continue;
      bool linked;
      if (params.p_random <= 0.0) {
        linked = false;
      } else if (params.p_random >= 1.0) {
        linked = true;
      } else {
        linked = rng.bernoulli(params.p_random);
      }
      pair[i * n + j] = pair[j * n + i] = linked ? 1 : 0;
    }
  }
  return abstraction_from_relation(
      root, [&](std::size_t i, std::size_t j) { return pair[i * n + j] != 0; });
}

ActionId random_abs_decide(std::span<const ActionStats> root,
                           const RandomAbsParams& params, Rng& rng) {
  return two_step_decision(random_abstraction(root, params, rng), root, rng);
}

}  // namespace aupo
