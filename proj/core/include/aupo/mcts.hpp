#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aupo/argmax.hpp"
#include "aupo/mdp.hpp"
#include "aupo/reward_tape.hpp"
#include "aupo/rng.hpp"

namespace aupo {

enum class RootPolicy { kUcb, kUniform };

struct MctsConfig {
  double exploration_c = 1.0;
  std::size_t iterations = 100;
  RootPolicy root_policy = RootPolicy::kUcb;
  /// Descend into an existing successor when the model can recognise a
  /// repeated sample (see ComparableStates). Otherwise every sampled
  /// successor becomes a new child.
  bool merge_successors = true;
};

/// q + lambda * sqrt(ln(total_visits) / visits).
inline double ucb_value(double q, std::uint64_t visits, std::uint64_t total_visits,
                        double lambda) {
  return q + lambda * std::sqrt(std::log(static_cast<double>(total_visits)) /
                                static_cast<double>(visits));
}

struct QNode {
  std::uint32_t visits = 0;
  double return_sum = 0.0;
  std::vector<std::uint32_t> children;  // state-node indices

  double q() const { return return_sum / static_cast<double>(visits); }
};

struct ActionStats {
  std::uint32_t visits = 0;
  double return_sum = 0.0;

  bool visited() const { return visits > 0; }
  double q() const { return return_sum / static_cast<double>(visits); }
};

/// Running count / sum / sum of squares over the Q values of all visited
/// Q-nodes.
struct QAggregate {
  std::size_t count = 0;
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double q) {
    ++count;
    sum += q;
    sum_sq += q * q;
  }
  void remove(double q) {
    --count;
    sum -= q;
    sum_sq -= q * q;
  }
  double population_std() const {
    if (count == 0) return 0.0;
    const double n = static_cast<double>(count);
    const double mean = sum / n;
    const double var = sum_sq / n - mean * mean;
    return var > 0.0 ? std::sqrt(var) : 0.0;
  }
};

template <class State>
struct StateNode {
  State state;
  bool terminal = false;
  int steps_left = 0;
  std::uint32_t entries = 0;
  std::vector<std::int32_t> qnodes;   // per ActionId, -1 while unexpanded
  std::vector<ActionId> unexpanded;

  bool fully_expanded() const { return unexpanded.empty(); }
};

template <class State>
class SearchTree {
 public:
  using Node = StateNode<State>;
  static constexpr std::uint32_t kRoot = 0;

  SearchTree() = default;

  std::uint32_t add_state(State state, bool terminal, int steps_left,
                          std::size_t num_actions) {
    Node node;
    node.state = std::move(state);
    node.terminal = terminal;
    node.steps_left = steps_left;
    node.entries = 1;
    if (!terminal && steps_left > 0) {
      node.qnodes.assign(num_actions, -1);
      node.unexpanded.resize(num_actions);
      for (std::size_t a = 0; a < num_actions; ++a) node.unexpanded[a] = a;
    }
    states_.push_back(std::move(node));
    return static_cast<std::uint32_t>(states_.size() - 1);
  }

  std::uint32_t add_qnode(std::uint32_t state, ActionId action) {
    auto& node = states_[state];
    qnodes_.emplace_back();
    const auto index = static_cast<std::int32_t>(qnodes_.size() - 1);
    node.qnodes[action] = index;
    std::erase(node.unexpanded, action);
    return static_cast<std::uint32_t>(index);
  }

  /// Adds one visit and the suffix return to every Q-node on `path`.
  /// `path[k]` is the Q-node whose immediate reward is `rewards[k]`;
  /// rewards past the path belong to the rollout.
  void backup(std::span<const std::uint32_t> path, std::span<const double> rewards,
              double discount) {
    double suffix = 0.0;
    for (std::size_t i = rewards.size(); i-- > 0;) {
      suffix = rewards[i] + discount * suffix;
      if (i < path.size()) {
        QNode& q = qnodes_[path[i]];
        if (q.visits > 0) aggregate_.remove(q.q());
        ++q.visits;
        q.return_sum += suffix;
        aggregate_.add(q.q());
      }
    }
  }

  Node& state(std::uint32_t index) { return states_[index]; }
  const Node& state(std::uint32_t index) const { return states_[index]; }
  QNode& qnode(std::uint32_t index) { return qnodes_[index]; }
  const QNode& qnode(std::uint32_t index) const { return qnodes_[index]; }
  const Node& root() const { return states_[kRoot]; }

  std::size_t state_count() const { return states_.size(); }
  std::size_t qnode_count() const { return qnodes_.size(); }

  const QAggregate& q_aggregate() const { return aggregate_; }

  /// Aggregate rebuilt from scratch over the tree.
  QAggregate recompute_q_aggregate() const {
    QAggregate fresh;
    for (const auto& q : qnodes_) {
      if (q.visits > 0) fresh.add(q.q());
    }
    return fresh;
  }

  /// Visits and return sums of the root actions, indexed by ActionId.
  std::vector<ActionStats> root_stats() const {
    const auto& root = states_[kRoot];
    std::vector<ActionStats> stats(root.qnodes.size());
    for (std::size_t a = 0; a < root.qnodes.size(); ++a) {
      if (root.qnodes[a] < 0) continue;
      const QNode& q = qnodes_[static_cast<std::size_t>(root.qnodes[a])];
      stats[a] = {q.visits, q.return_sum};
    }
    return stats;
  }

  std::uint32_t visits_of(const Node& node, ActionId action) const {
    return node.qnodes[action] < 0
               ? 0
               : qnodes_[static_cast<std::size_t>(node.qnodes[action])].visits;
  }

 private:
  std::vector<Node> states_;
  std::vector<QNode> qnodes_;
  QAggregate aggregate_;
};

/// Population std of all tree Q values; 1 when fewer than two Q-nodes have
/// been visited or the spread is below 1e-12.
template <class State>
double global_std(const SearchTree<State>& tree) {
  const QAggregate& agg = tree.q_aggregate();
  if (agg.count < 2) return 1.0;
  const double sigma = agg.population_std();
  return sigma < 1e-12 ? 1.0 : sigma;
}

/// UCB argmax over the actions of a fully expanded node, random ties.
template <class State>
ActionId select_child(const SearchTree<State>& tree, const StateNode<State>& node,
                      double lambda, Rng& rng) {
  std::uint64_t total = 0;
  for (auto qi : node.qnodes) total += tree.qnode(static_cast<std::uint32_t>(qi)).visits;
  auto best = argmax_random_tie(
      node.qnodes.size(),
      [&](std::size_t a) {
        const QNode& q = tree.qnode(static_cast<std::uint32_t>(node.qnodes[a]));
        return ucb_value(q.q(), q.visits, total, lambda);
      },
      [](std::size_t) { return true; }, rng);
  return *best;
}

/// Least-visited action of a node (unexpanded actions count as 0 visits).
template <class State>
ActionId least_visited(const SearchTree<State>& tree, const StateNode<State>& node,
                       Rng& rng) {
  auto best = argmax_random_tie(
      node.qnodes.size(),
      [&](std::size_t a) { return -static_cast<double>(tree.visits_of(node, a)); },
      [](std::size_t) { return true; }, rng);
  return *best;
}

/// Uniform-random playout; appends rewards to `out` until a terminal state
/// or `remaining` steps.
template <MdpModel M>
void rollout_into(const M& model, typename M::State state, int remaining, Rng& rng,
                  std::vector<double>& out) {
  for (int t = 0; t < remaining; ++t) {
    const std::size_t n = model.num_actions(state);
    auto tr = model.step(state, rng.below(n), rng);
    out.push_back(tr.reward);
    if (tr.terminal) return;
    state = std::move(tr.next);
  }
}

template <MdpModel M>
std::vector<double> rollout(const M& model, const typename M::State& state,
                            int remaining, Rng& rng) {
  std::vector<double> out;
  rollout_into(model, state, remaining, rng, out);
  return out;
}

/// Highest root Q among visited actions, random ties. Throws
/// ContractViolation when no root action was visited.
inline ActionId greedy_decision(std::span<const ActionStats> root, Rng& rng) {
  auto best = argmax_random_tie(
      root.size(), [&](std::size_t a) { return root[a].q(); },
      [&](std::size_t a) { return root[a].visited(); }, rng);
  if (!best) throw ContractViolation("greedy decision without visited actions");
  return *best;
}

/// Most visits at the root, random ties.
inline ActionId most_visits_decision(std::span<const ActionStats> root, Rng& rng) {
  auto best = argmax_random_tie(
      root.size(), [&](std::size_t a) { return static_cast<double>(root[a].visits); },
      [&](std::size_t a) { return root[a].visited(); }, rng);
  if (!best) throw ContractViolation("decision without visited actions");
  return *best;
}

template <class State>
ActionId greedy_decision(const SearchTree<State>& tree, Rng& rng) {
  const auto stats = tree.root_stats();
  return greedy_decision(std::span<const ActionStats>(stats), rng);
}

template <class State>
struct SearchResult {
  SearchTree<State> tree;
  RewardTape tape;
};

/// UCT search from `root_state` with `steps_left` steps of horizon left.
///
/// Runs exactly `config.iterations` selection / expansion / rollout /
/// backup cycles. The exploration factor is `exploration_c` times the
/// global Q-value std, refreshed before every iteration. When `tape_depth`
/// is positive every sampled trajectory is recorded into the reward tape
/// under its root action.
template <MdpModel M>
SearchResult<typename M::State> search(const M& model,
                                       const typename M::State& root_state,
                                       int steps_left, const MctsConfig& config,
                                       std::size_t tape_depth, Rng& rng) {
  using State = typename M::State;
  SearchResult<State> result;
  SearchTree<State>& tree = result.tree;
  const std::size_t root_actions = model.num_actions(root_state);
  tree.add_state(root_state, false, steps_left, root_actions);
  result.tape = RewardTape(tape_depth > 0 ? root_actions : 0, tape_depth);
  result.tape.reserve(config.iterations);

  const double discount = model.discount();
  std::vector<std::uint32_t> path;
  std::vector<double> rewards;

  for (std::size_t it = 0; it < config.iterations; ++it) {
    const double lambda = config.exploration_c * global_std(tree);
    path.clear();
    rewards.clear();
    std::uint32_t current = SearchTree<State>::kRoot;
    ActionId root_action = 0;

    while (true) {
      auto& node = tree.state(current);
      if (node.terminal || node.steps_left <= 0) break;

      ActionId action;
      if (current == SearchTree<State>::kRoot &&
          config.root_policy == RootPolicy::kUniform) {
        action = least_visited(tree, node, rng);
      } else if (!node.fully_expanded()) {
        action = node.unexpanded[rng.below(node.unexpanded.size())];
      } else {
        action = select_child(tree, node, lambda, rng);
      }
      if (current == SearchTree<State>::kRoot) root_action = action;

      bool fresh = false;
      std::uint32_t qi;
      if (node.qnodes[action] < 0) {
        qi = tree.add_qnode(current, action);
        fresh = true;
      } else {
        qi = static_cast<std::uint32_t>(node.qnodes[action]);
      }

      const int child_steps = node.steps_left - 1;
      auto tr = model.step(node.state, action, rng);
      rewards.push_back(tr.reward);
      path.push_back(qi);

      if constexpr (ComparableStates<M>) {
        if (!fresh && config.merge_successors) {
          std::int64_t match = -1;
          for (std::uint32_t child : tree.qnode(qi).children) {
            if (model.same_state(tree.state(child).state, tr.next)) {
              match = child;
              break;
            }
          }
          if (match >= 0) {
            current = static_cast<std::uint32_t>(match);
            ++tree.state(current).entries;
            continue;
          }
        }
      }

      const std::size_t child_actions =
          tr.terminal || child_steps <= 0 ? 0 : model.num_actions(tr.next);
      const std::uint32_t child =
          tree.add_state(std::move(tr.next), tr.terminal, child_steps, child_actions);
      tree.qnode(qi).children.push_back(child);
      current = child;
      break;
    }

    const auto& leaf = tree.state(current);
    if (!leaf.terminal && leaf.steps_left > 0) {
      rollout_into(model, leaf.state, leaf.steps_left, rng, rewards);
    }
    tree.backup(path, rewards, discount);
    if (result.tape.enabled() && !path.empty()) {
      result.tape.record(root_action, rewards, discount);
    }
  }
  return result;
}

template <MdpModel M>
SearchResult<typename M::State> search(const M& model,
                                       const typename M::State& root_state,
                                       const MctsConfig& config,
                                       std::size_t tape_depth, Rng& rng) {
  return search(model, root_state, model.horizon(), config, tape_depth, rng);
}

}  // namespace aupo
