#include <benchmark/benchmark.h>

#include <vector>

#include "aupo/abstraction.hpp"
#include "aupo/env/gaussian_mab.hpp"
#include "aupo/env/sysadmin.hpp"
#include "aupo/mcts.hpp"

namespace {

using namespace aupo;

const SysAdmin& hub() {
  static const SysAdmin env = make_hub_sysadmin(9);
  return env;
}

SysAdminState hub_start() {
  auto s = hub().all_running();
  s.running[3] = 0;
  return s;
}

const GaussianMab& bandit() {
  static const GaussianMab env =
      make_gaussian_mab({0.3, 0.3, 0.3, 0.3, 0, 0, 0, 0}, std::vector<double>(8, 1.0));
  return env;
}

// range(0): iterations, range(1): tape depth (0 = plain MCTS)
void BM_SysAdminSearch(benchmark::State& st) {
  const auto start = hub_start();
  const MctsConfig config{1.0, static_cast<std::size_t>(st.range(0))};
  Rng rng(1);
  for (auto _ : st) {
    auto r = search(hub(), start, config, static_cast<std::size_t>(st.range(1)), rng);
    benchmark::DoNotOptimize(r.tree.root_stats());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_SysAdminSearch)
    ->ArgsProduct({{100, 2000}, {0, 3}})
    ->Unit(benchmark::kMillisecond);

void BM_MabSearch(benchmark::State& st) {
  const MctsConfig config{1.0, static_cast<std::size_t>(st.range(0))};
  Rng rng(2);
  for (auto _ : st) {
    auto r = search(bandit(), MabState{}, config, static_cast<std::size_t>(st.range(1)), rng);
    benchmark::DoNotOptimize(r.tree.root_stats());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_MabSearch)->ArgsProduct({{100, 2000}, {0, 1}})->Unit(benchmark::kMicrosecond);

// Decision only, on a fixed finished search.
void BM_AupoDecide(benchmark::State& st) {
  Rng rng(3);
  const auto depth = static_cast<std::size_t>(st.range(1));
  const auto r = search(hub(), hub_start(),
                        MctsConfig{1.0, static_cast<std::size_t>(st.range(0))}, depth, rng);
  const auto stats = r.tree.root_stats();
  const AupoParams params{0.95, depth, true, true};
  for (auto _ : st) {
    benchmark::DoNotOptimize(aupo_decide(std::span<const ActionStats>(stats), r.tape, params, rng));
  }
}
BENCHMARK(BM_AupoDecide)->ArgsProduct({{100, 2000}, {1, 3}});

void BM_GreedyDecide(benchmark::State& st) {
  Rng rng(4);
  const auto r = search(hub(), hub_start(), MctsConfig{1.0, 2000}, 0, rng);
  const auto stats = r.tree.root_stats();
  for (auto _ : st) {
    benchmark::DoNotOptimize(greedy_decision(std::span<const ActionStats>(stats), rng));
  }
}
BENCHMARK(BM_GreedyDecide);

}  // namespace

BENCHMARK_MAIN();
