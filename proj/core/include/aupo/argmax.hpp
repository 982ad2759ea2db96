#pragma once

#include <cstddef>
#include <limits>
#include <optional>

#include "aupo/rng.hpp"

namespace aupo {

/// Index in [0, n) maximising `value(i)` among indices with `eligible(i)`;
/// exact ties are broken uniformly through `rng`, which is only consumed
/// when a tie exists. Empty when nothing is eligible.
template <class Value, class Eligible>
std::optional<std::size_t> argmax_random_tie(std::size_t n, Value&& value,
                                             Eligible&& eligible, Rng& rng) {
  double best = -std::numeric_limits<double>::infinity();
  std::size_t ties = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!eligible(i)) continue;
    const double v = value(i);
    if (ties == 0 || v > best) {
      best = v;
      ties = 1;
    } else if (v == best) {
      ++ties;
    }
  }
  if (ties == 0) return std::nullopt;
  std::size_t pick = ties == 1 ? 0 : rng.below(ties);
  for (std::size_t i = 0; i < n; ++i) {
    if (!eligible(i) || value(i) != best) continue;
    if (pick == 0) return i;
    --pick;
  }
  return std::nullopt;
}

}  // namespace aupo
