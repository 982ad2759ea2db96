#include "aupo/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace aupo::harness {

namespace {

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& thread : pool) thread.join();
  if (failure) std::rethrow_exception(failure);
}

struct EpisodeOutcome {
  double ret = 0.0;
  std::vector<double> decision_ms;
};

template <MdpModel M>
ResultRecord run_agent(const M& model, const std::string& env_id, const AgentSpec& agent,
                       std::size_t iterations, const ExperimentConfig& config,
                       const RunOptions& options) {
  std::vector<EpisodeOutcome> outcomes(config.episodes);
  parallel_for(config.episodes, options.threads, [&](std::size_t episode) {
    Rng rng = Rng::substream(config.seed, episode);
    // Search draws come from a separate per-step stream so that agents
    // making the same choices also see the same environment outcomes.
    const std::uint64_t agent_base = splitmix64(~config.seed ^ splitmix64(episode));
    std::uint64_t step = 0;
    auto& outcome = outcomes[episode];
    auto policy = [&](const typename M::State& state, int steps_left, Rng&) {
      Rng search_rng = Rng::substream(agent_base, step++);
      const auto start = std::chrono::steady_clock::now();
      const ActionId action = decide(model, state, steps_left, agent, iterations, search_rng);
      const auto stop = std::chrono::steady_clock::now();
      outcome.decision_ms.push_back(
          std::chrono::duration<double, std::milli>(stop - start).count());
      return action;
    };
    const auto trajectory = run_episode(model, policy, rng);
    outcome.ret = episode_return(trajectory, model.discount());
  });

  ResultRecord record;
  record.env = env_id;
  record.agent = agent.id();
  record.params = agent.params();
  record.iterations = iterations;
  record.episodes = config.episodes;
  std::vector<double> timings;
  for (const auto& outcome : outcomes) {
    record.returns.push_back(outcome.ret);
    timings.insert(timings.end(), outcome.decision_ms.begin(), outcome.decision_ms.end());
  }
  if (record.returns.size() >= 2) {
    const auto ci = report_ci(record.returns, 0.99);
    record.mean_return = ci.mean;
    record.ci99_half = ci.half_width;
  } else {
    record.mean_return = record.returns.front();
  }
  const auto timing = summarize_timings(std::move(timings));
  record.mean_decision_ms = timing.mean_ms;
  record.median_decision_ms = timing.median_ms;
  return record;
}

std::vector<ResultRecord> run_all(const ExperimentConfig& config,
                                  const std::vector<AgentSpec>& agents,
                                  const RunOptions& options) {
  std::vector<ResultRecord> records;
  for (const auto& env_config : config.environments) {
    const auto env = make_environment(env_config, config.limits());
    const auto env_id = env_config.display_id();
    for (auto budget : config.budgets) {
      for (const auto& agent : agents) {
        std::visit(
            [&](const auto& model) {
              records.push_back(run_agent(model, env_id, agent, budget, config, options));
            },
            env);
      }
    }
  }
  return records;
}

std::vector<FamilyBest> best_per_family(const std::vector<AgentKey>& agents,
                                        const std::vector<double>& scores) {
  std::vector<FamilyBest> best;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    auto it = std::find_if(best.begin(), best.end(),
                           [&](const FamilyBest& b) { return b.agent == agents[i].agent; });
    if (it == best.end()) {
      best.push_back({agents[i].agent, agents[i].params, scores[i]});
    } else if (scores[i] > it->score) {
      *it = {agents[i].agent, agents[i].params, scores[i]};
    }
  }
  std::stable_sort(best.begin(), best.end(),
                   [](const FamilyBest& a, const FamilyBest& b) { return a.score > b.score; });
  return best;
}

}  // namespace

std::vector<ResultRecord> run_experiment(const ExperimentConfig& config,
                                         const RunOptions& options) {
  config.validate();
  return run_all(config, config.agent_specs(false), options);
}

std::vector<ResultRecord> sweep(const ExperimentConfig& config, const RunOptions& options) {
  config.validate();
  return run_all(config, config.agent_specs(true), options);
}

ScoreReport compute_scores(const std::vector<ResultRecord>& records) {
  ScoreReport report;
  std::map<std::pair<std::size_t, std::size_t>, double> cells;
  for (const auto& r : records) {
    const AgentKey key{r.agent, r.params};
    auto a = std::find(report.agents.begin(), report.agents.end(), key);
    if (a == report.agents.end()) a = report.agents.insert(report.agents.end(), key);
    const std::string task = r.env + "@" + std::to_string(r.iterations);
    auto t = std::find(report.tasks.begin(), report.tasks.end(), task);
    if (t == report.tasks.end()) t = report.tasks.insert(report.tasks.end(), task);
    const std::pair cell{std::size_t(a - report.agents.begin()),
                         std::size_t(t - report.tasks.begin())};
    if (!cells.emplace(cell, r.mean_return).second) {
      throw std::runtime_error("duplicate result for " + key.agent + " [" + key.params +
                               "] on " + task);
    }
  }
  PerformanceTable table(report.agents.size(), report.tasks.size());
  for (std::size_t i = 0; i < table.agents(); ++i) {
    for (std::size_t k = 0; k < table.tasks(); ++k) {
      const auto it = cells.find({i, k});
      if (it == cells.end()) {
        throw std::runtime_error("missing result for " + report.agents[i].agent + " [" +
                                 report.agents[i].params + "] on " + report.tasks[k]);
      }
      table.perf(i, k) = it->second;
    }
  }
  try {
    table.validate();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
  report.pairings = pairings_matrix(table);
  report.relative = relative_matrix(table);
  report.pairings_score = agent_scores(report.pairings);
  report.relative_score = agent_scores(report.relative);
  report.best_pairings = best_per_family(report.agents, report.pairings_score);
  report.best_relative = best_per_family(report.agents, report.relative_score);
  return report;
}

TimingStats summarize_timings(std::vector<double> milliseconds) {
  TimingStats stats;
  stats.samples = milliseconds.size();
  if (milliseconds.empty()) return stats;
  stats.mean_ms = std::accumulate(milliseconds.begin(), milliseconds.end(), 0.0) /
                  static_cast<double>(milliseconds.size());
  std::sort(milliseconds.begin(), milliseconds.end());
  const std::size_t mid = milliseconds.size() / 2;
  stats.median_ms = milliseconds.size() % 2 == 1
                        ? milliseconds[mid]
                        : 0.5 * (milliseconds[mid - 1] + milliseconds[mid]);
  return stats;
}

std::vector<BenchRecord> time_decisions(const ExperimentConfig& config) {
  config.validate();
  const auto agents = config.agent_specs(true);
  std::vector<BenchRecord> records;
  for (const auto& env_config : config.environments) {
    const auto env = make_environment(env_config, config.limits());
    for (auto budget : config.budgets) {
      for (const auto& agent : agents) {
        BenchRecord record{env_config.display_id(), agent.id(), agent.params(), budget, {}};
        std::visit(
            [&](const auto& model) {
              record.timing = time_decisions(model, agent, budget,
                                             config.bench_repetitions, config.seed);
            },
            env);
        records.push_back(std::move(record));
      }
    }
  }
  return records;
}

}  // namespace aupo::harness
