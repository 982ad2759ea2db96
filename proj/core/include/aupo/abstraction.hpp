#pragma once

#include <span>
#include <vector>

#include "aupo/mcts.hpp"
#include "aupo/reward_tape.hpp"
#include "aupo/stats.hpp"

namespace aupo {

struct AupoParams {
  double q = 0.95;              // confidence level in [0, 1]
  std::size_t depth = 1;        // distribution tracking depth D
  bool return_filter = false;   // RF
  bool std_filter = false;      // SF
  /// RF compares full trajectory returns instead of depth-truncated ones.
  bool rf_full_return = false;

  /// Throws std::invalid_argument when q is outside [0, 1] or depth is 0.
  void validate() const;
};

/// Confidence intervals of one root action's tape entries.
struct ActionIntervals {
  std::size_t samples = 0;
  std::vector<Interval> mean;  // per depth 1..D (index d - 1)
  std::vector<Interval> std;
  Interval return_mean;
  Interval return_std;
};

std::vector<ActionIntervals> compute_intervals(const RewardTape& tape,
                                               const AupoParams& params);

/// All layer mean intervals overlap, plus std intervals with SF, plus the
/// return intervals with RF.
bool intervals_grouped(const ActionIntervals& a, const ActionIntervals& b,
                       const AupoParams& params);

/// Grouping test straight from the tape. Both actions need samples.
bool actions_grouped(const RewardTape& tape, ActionId j, ActionId k,
                     const AupoParams& params);

/// Reflexive, symmetric (not necessarily transitive) grouping of the
/// visited root actions with pooled abstract Q values. Unvisited actions
/// get an empty group and are never chosen.
struct AbstractionResult {
  std::vector<std::vector<ActionId>> groups;
  std::vector<double> abstract_q;

  bool grouped(ActionId i, ActionId j) const;
};

/// Builds groups from any symmetric relation `related(i, j)` over the
/// visited actions; abstract_q[i] = Σ return sums / Σ visits over the group.
template <class Related>
AbstractionResult abstraction_from_relation(std::span<const ActionStats> root,
                                            Related&& related) {
  const std::size_t n = root.size();
  AbstractionResult result;
  result.groups.assign(n, {});
  result.abstract_q.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!root[i].visited()) continue;
    double value = 0.0;
    double visits = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!root[j].visited()) continue;
      if (i != j && !related(i, j)) continue;
      result.groups[i].push_back(j);
      value += root[j].return_sum;
      visits += root[j].visits;
    }
    result.abstract_q[i] = value / visits;
  }
  return result;
}

AbstractionResult build_abstraction(const RewardTape& tape,
                                    std::span<const ActionStats> root,
                                    const AupoParams& params);

/// Step 1: action with the highest abstract Q (random ties). Step 2: the
/// highest ground Q inside that action's group (random ties).
ActionId two_step_decision(const AbstractionResult& abstraction,
                           std::span<const ActionStats> root, Rng& rng);

ActionId aupo_decide(std::span<const ActionStats> root, const RewardTape& tape,
                     const AupoParams& params, Rng& rng);

template <class State>
ActionId aupo_decide(const SearchTree<State>& tree, const RewardTape& tape,
                     const AupoParams& params, Rng& rng) {
  const auto stats = tree.root_stats();
  return aupo_decide(std::span<const ActionStats>(stats), tape, params, rng);
}

}  // namespace aupo
