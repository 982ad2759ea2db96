#pragma once

#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "aupo/rng.hpp"

namespace aupo {

/// Index into the legal-action list of the state it is used with.
/// Environments keep the ordering fixed so ids are stable across runs.
using ActionId = std::size_t;

/// Raised when a caller breaks a documented precondition of the MDP
/// contract (stepping a terminal state, choosing an illegal action).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct EpisodeLimits {
  int horizon = 50;
  double discount = 1.0;
};

template <class State>
struct Transition {
  State next;
  double reward = 0.0;
  bool terminal = false;
};

struct TransitionStep {
  ActionId action = 0;
  double reward = 0.0;
  bool ended = false;
};

struct Trajectory {
  std::vector<TransitionStep> steps;

  std::size_t depth() const { return steps.size(); }
  std::vector<double> rewards() const;
};

// clang-format off
/// Behavioral contract every environment satisfies. States are opaque to
/// the search; `num_actions(s)` defines the legal ids 0..n-1 for `s`.
template <class M>
concept MdpModel = requires(const M& model, const typename M::State& state,
                            ActionId action, Rng& rng) {
  typename M::State;
  { model.horizon() } -> std::convertible_to<int>;
  { model.discount() } -> std::convertible_to<double>;
  { model.initial_state(rng) } -> std::same_as<typename M::State>;
  { model.num_actions(state) } -> std::convertible_to<std::size_t>;
  { model.step(state, action, rng) } -> std::same_as<Transition<typename M::State>>;
  { model.name() } -> std::convertible_to<std::string>;
};

/// Optional: a model that can tell whether two sampled states coincide.
/// The search uses it to merge repeated successors of a Q-node.
template <class M>
concept ComparableStates = MdpModel<M> && requires(const M& model,
                                                   const typename M::State& a,
                                                   const typename M::State& b) {
  { model.same_state(a, b) } -> std::convertible_to<bool>;
};
// clang-format on

/// Σ r_i · discount^i over the rewards in order (i from 0).
double discounted_sum(std::span<const double> rewards, double discount);

double episode_return(const Trajectory& trajectory, double discount);

/// Sum of the first min(depth, |rewards|) rewards.
double truncated_return(std::span<const double> rewards, std::size_t depth);

/// Plays one episode from `model.initial_state(rng)` until a terminal state
/// or `model.horizon()` steps. `agent(state, steps_left, rng)` must return
/// a legal id; `steps_left` counts the current step.
template <MdpModel M, class Agent>
Trajectory run_episode(const M& model, Agent&& agent, Rng& rng) {
  Trajectory trajectory;
  auto state = model.initial_state(rng);
  const int horizon = model.horizon();
  for (int t = 0; t < horizon; ++t) {
    const std::size_t legal = model.num_actions(state);
    const ActionId action = agent(state, static_cast<int>(horizon - t), rng);
    if (action >= legal) {
      throw ContractViolation("agent chose action " + std::to_string(action) +
                              " but only " + std::to_string(legal) +
                              " are legal");
    }
    auto transition = model.step(state, action, rng);
    trajectory.steps.push_back({action, transition.reward, transition.terminal});
    if (transition.terminal) break;
    state = std::move(transition.next);
  }
  return trajectory;
}

}  // namespace aupo
