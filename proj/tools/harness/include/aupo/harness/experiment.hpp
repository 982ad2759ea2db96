#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "aupo/harness/config.hpp"
#include "aupo/scores.hpp"

namespace aupo::harness {

struct ResultRecord {
  std::string env;
  std::string agent;
  std::string params;
  std::size_t iterations = 0;
  std::size_t episodes = 0;
  double mean_return = 0.0;
  double ci99_half = 0.0;
  double mean_decision_ms = 0.0;
  double median_decision_ms = 0.0;
  /// Per-episode returns in episode order (kept for --emit-raw).
  std::vector<double> returns;
};

struct RunOptions {
  unsigned threads = 1;
};

/// Fresh search from `state`, then the agent's decision rule.
template <MdpModel M>
ActionId decide(const M& model, const typename M::State& state, int steps_left,
                const AgentSpec& agent, std::size_t iterations, Rng& rng) {
  MctsConfig config;
  config.exploration_c = agent.exploration_c;
  config.iterations = iterations;
  config.root_policy = agent.root_policy;
  const std::size_t tape_depth = agent.aupo ? agent.aupo->depth : 0;
  const auto result = search(model, state, steps_left, config, tape_depth, rng);
  const auto stats = result.tree.root_stats();
  const std::span<const ActionStats> root(stats);
  switch (agent.kind) {
    case AgentKind::kAupo:
      return aupo_decide(root, result.tape, *agent.aupo, rng);
    case AgentKind::kRandomAbs:
      return random_abs_decide(root, *agent.random, rng);
    case AgentKind::kMcts:
      break;
  }
  return agent.decision == DecisionRule::kMostVisits ? most_visits_decision(root, rng)
                                                     : greedy_decision(root, rng);
}

/// Episode i of every agent draws environment randomness from
/// Rng::substream(seed, i) and search randomness from a per-step stream
/// derived from (seed, i, step), so agents are compared on paired streams
/// and results do not depend on the thread count.
std::vector<ResultRecord> run_experiment(const ExperimentConfig& config,
                                         const RunOptions& options = {});

/// Expands every list-valued agent parameter and runs all combinations.
std::vector<ResultRecord> sweep(const ExperimentConfig& config,
                                const RunOptions& options = {});

struct AgentKey {
  std::string agent;
  std::string params;
  bool operator==(const AgentKey&) const = default;
};

struct FamilyBest {
  std::string agent;
  std::string params;
  double score = 0.0;
};

struct ScoreReport {
  std::vector<AgentKey> agents;
  std::vector<std::string> tasks;  // "env@iterations"
  ScoreMatrix pairings;
  ScoreMatrix relative;
  std::vector<double> pairings_score;
  std::vector<double> relative_score;
  std::vector<FamilyBest> best_pairings;   // one per family, sorted by score
  std::vector<FamilyBest> best_relative;
};

/// Needs every (agent, task) cell exactly once; throws std::runtime_error
/// on missing or duplicate cells.
ScoreReport compute_scores(const std::vector<ResultRecord>& records);

struct TimingStats {
  std::size_t samples = 0;
  double mean_ms = 0.0;
  double median_ms = 0.0;
};

TimingStats summarize_timings(std::vector<double> milliseconds);

/// A state reached by a random walk of uniform actions whose length is
/// uniform in [0, horizon); the walk stops early rather than enter a
/// terminal state.
template <MdpModel M>
std::pair<typename M::State, int> sample_walk_state(const M& model, Rng& rng) {
  auto state = model.initial_state(rng);
  const int horizon = model.horizon();
  const int length = static_cast<int>(rng.below(static_cast<std::uint64_t>(horizon)));
  int taken = 0;
  for (; taken < length; ++taken) {
    const auto n = model.num_actions(state);
    auto transition = model.step(state, rng.below(n), rng);
    if (transition.terminal) break;
    state = std::move(transition.next);
  }
  return {std::move(state), horizon - taken};
}

struct BenchRecord {
  std::string env;
  std::string agent;
  std::string params;
  std::size_t iterations = 0;
  TimingStats timing;
};

/// Times search plus decision of every agent on `repetitions` walk-sampled
/// states per (environment, budget); all agents see the same states.
std::vector<BenchRecord> time_decisions(const ExperimentConfig& config);

template <MdpModel M>
TimingStats time_decisions(const M& model, const AgentSpec& agent,
                           std::size_t iterations, std::size_t repetitions,
                           std::uint64_t seed) {
  std::vector<double> ms;
  for (std::size_t r = 0; r < repetitions; ++r) {
    Rng walk = Rng::substream(seed, r);
    const auto [state, steps_left] = sample_walk_state(model, walk);
    Rng rng = Rng::substream(~seed, r);
    const auto start = std::chrono::steady_clock::now();
    decide(model, state, steps_left, agent, iterations, rng);
    const auto stop = std::chrono::steady_clock::now();
    ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return summarize_timings(std::move(ms));
}

}  // namespace aupo::harness
