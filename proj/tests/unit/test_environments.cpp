#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "aupo/env/game_of_life.hpp"
#include "aupo/env/gaussian_mab.hpp"
#include "aupo/env/layered_gaussian.hpp"
#include "aupo/env/sysadmin.hpp"

namespace aupo {
namespace {

template <class Model>
double mean_reward_at_depth(const Model& model, const typename Model::State& start,
                            ActionId first, std::size_t depth, int samples,
                            std::uint64_t seed) {
  Rng rng(seed);
  double sum = 0.0;
  for (int s = 0; s < samples; ++s) {
    auto state = start;
    double r = 0.0;
    for (std::size_t d = 1; d <= depth; ++d) {
      const ActionId a = d == 1 ? first : rng.below(model.num_actions(state));
      auto tr = model.step(state, a, rng);
      r = tr.reward;
      state = std::move(tr.next);
    }
    sum += r;
  }
  return sum / samples;
}

// ---- Gaussian MAB ----

TEST(GaussianMab, ZeroVarianceArmPaysItsMean) {
  const auto mab = make_gaussian_mab({1.0}, {0.0});
  Rng rng(1);
  const auto tr = mab.step(mab.initial_state(rng), 0, rng);
  EXPECT_EQ(tr.reward, 1.0);
  EXPECT_TRUE(tr.terminal);
}

TEST(GaussianMab, OneActionPerArm) {
  const auto mab = make_gaussian_mab({0, 1, 2, 3}, {1, 1, 1, 1});
  Rng rng(1);
  EXPECT_EQ(mab.num_actions(mab.initial_state(rng)), 4u);
}

TEST(GaussianMab, EmpiricalMeanWithinClt) {
  const auto mab = make_gaussian_mab({0.0}, {1.0});
  Rng rng(11);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) sum += mab.step({}, 0, rng).reward;
  EXPECT_NEAR(sum / 100000, 0.0, 0.02);
}

TEST(GaussianMab, RejectsBadArms) {
  EXPECT_THROW(make_gaussian_mab({}, {}), std::invalid_argument);
  EXPECT_THROW(make_gaussian_mab({1, 2}, {1}), std::invalid_argument);
  EXPECT_THROW(make_gaussian_mab({1}, {-1}), std::invalid_argument);
}

TEST(GaussianMab, SteppingPulledStateIsViolation) {
  const auto mab = make_gaussian_mab({1.0}, {0.0});
  Rng rng(1);
  EXPECT_THROW(mab.step(MabState{true}, 0, rng), ContractViolation);
}

// ---- SysAdmin ----

SysAdminState fig1a_state(const SysAdmin& env) {
  auto s = env.all_running();
  s.running[3] = 0;
  return s;
}

TEST(SysAdmin, HubTopologyAndActionOrder) {
  const auto env = make_hub_sysadmin(9);
  EXPECT_EQ(env.machines(), 10u);
  EXPECT_EQ(env.num_actions(env.all_running()), 11u);
  EXPECT_EQ(env.idle_action(), 10u);
  EXPECT_EQ(env.neighbors(0).size(), 9u);
  EXPECT_EQ(env.neighbors(4), (std::vector<std::size_t>{0}));
}

TEST(SysAdmin, RebootFromAllDownRunsExactlyThatMachine) {
  const auto env = make_hub_sysadmin(5);
  SysAdminState down{std::vector<std::uint8_t>(env.machines(), 0)};
  Rng rng(2);
  for (std::size_t k = 0; k < env.machines(); ++k) {
    const auto tr = env.step(down, env.reboot_action(k), rng);
    EXPECT_EQ(tr.next.running_count(), 1u);
    EXPECT_TRUE(tr.next.running[k]);
  }
}

TEST(SysAdmin, RewardCountsRunningMachinesOfCurrentState) {
  const auto env = make_hub_sysadmin(9, 0.75);
  const auto s = fig1a_state(env);
  const double m = static_cast<double>(s.running_count());
  Rng rng(3);
  EXPECT_DOUBLE_EQ(env.step(s, env.idle_action(), rng).reward, m);
  EXPECT_DOUBLE_EQ(env.step(s, env.reboot_action(5), rng).reward, m - 0.75);
}

TEST(SysAdmin, StayUpProbabilityFollowsNeighbors) {
  const auto env = make_hub_sysadmin(4);
  auto s = env.all_running();
  EXPECT_DOUBLE_EQ(env.stay_up_probability(s, 1), 0.95);
  s.running[0] = 0;
  EXPECT_DOUBLE_EQ(env.stay_up_probability(s, 1), 0.45 + 0.5 * 0.5);
  EXPECT_DOUBLE_EQ(env.stay_up_probability(s, 0), 0.45 + 0.5 * 5.0 / 5.0);
}

TEST(SysAdmin, DownMachineStaysDownUnlessRebooted) {
  const auto env = make_hub_sysadmin(9);
  const auto s = fig1a_state(env);
  Rng rng(4);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_FALSE(env.step(s, env.idle_action(), rng).next.running[3]);
    EXPECT_TRUE(env.step(s, env.reboot_action(3), rng).next.running[3]);
  }
}

TEST(SysAdmin, RebootingDownMachinePaysAboutOneMoreAtDepthTwo) {
  const auto env = make_hub_sysadmin(9);
  const auto s = fig1a_state(env);
  const int n = 100000;
  const double reboot = mean_reward_at_depth(env, s, env.reboot_action(3), 2, n, 5);
  const double idle = mean_reward_at_depth(env, s, env.idle_action(), 2, n, 6);
  EXPECT_NEAR(reboot - idle, 1.0, 0.15);
}

TEST(SysAdmin, OuterMachinesWithEqualStatusAreInterchangeable) {
  const auto env = make_hub_sysadmin(9);
  const auto s = fig1a_state(env);
  for (std::size_t depth = 1; depth <= 3; ++depth) {
    const double a = mean_reward_at_depth(env, s, env.reboot_action(1), depth, 40000, 7);
    const double b = mean_reward_at_depth(env, s, env.reboot_action(2), depth, 40000, 8);
    EXPECT_NEAR(a, b, 0.05) << "depth " << depth;
  }
}

TEST(SysAdmin, NoTerminalStates) {
  const auto env = make_hub_sysadmin(3);
  Rng rng(9);
  auto s = env.all_running();
  for (int t = 0; t < 200; ++t) {
    auto tr = env.step(s, rng.below(env.num_actions(s)), rng);
    EXPECT_FALSE(tr.terminal);
    s = tr.next;
  }
}

// ---- Game of Life ----

LifeGrid brute_force_conway(const LifeGrid& g) {
  LifeGrid next(g.width, g.height);
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      int n = 0;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          const int xx = x + dx;
          const int yy = y + dy;
          if (xx >= 0 && yy >= 0 && xx < g.width && yy < g.height && g.at(xx, yy)) ++n;
        }
      }
      next.set(x, y, g.at(x, y) ? (n == 2 || n == 3) : n == 3);
    }
  }
  return next;
}

TEST(GameOfLife, EmptyGridNoopStaysEmpty) {
  GameOfLife env(5, 5, 1.0);
  Rng rng(1);
  const auto tr = env.step(LifeGrid(5, 5), env.noop_action(), rng);
  EXPECT_EQ(tr.next.alive_count(), 0u);
  EXPECT_EQ(tr.reward, 0.0);
}

TEST(GameOfLife, SaveOverridesDeath) {
  GameOfLife env(5, 5, 1.0);
  Rng rng(1);
  const auto tr = env.step(LifeGrid(5, 5), env.save_action(2, 3), rng);
  EXPECT_EQ(tr.next.alive_count(), 1u);
  EXPECT_TRUE(tr.next.at(2, 3));
  EXPECT_EQ(tr.reward, 1.0);
}

TEST(GameOfLife, NoiselessNoopMatchesBruteForceConway) {
  GameOfLife env(4, 4, 1.0);
  Rng rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    LifeGrid g(4, 4);
    for (auto& c : g.alive) c = rng.bernoulli(0.5) ? 1 : 0;
    EXPECT_EQ(env.step(g, env.noop_action(), rng).next, brute_force_conway(g));
  }
}

TEST(GameOfLife, FlipRateMatchesFidelity) {
  GameOfLife env(5, 5, 0.9);
  const LifeGrid g(5, 5);
  Rng rng(13);
  std::size_t alive = 0;
  const int trials = 4000;
  for (int i = 0; i < trials; ++i) alive += env.step(g, env.noop_action(), rng).next.alive_count();
  EXPECT_NEAR(static_cast<double>(alive) / (25.0 * trials), 0.1, 0.006);
}

TEST(GameOfLife, CornerSavesAreSymmetric) {
  GameOfLife env(5, 5, 0.95);
  const auto start = four_corners_grid(5);
  const ActionId corners[] = {env.save_action(0, 0), env.save_action(4, 0),
                              env.save_action(0, 4), env.save_action(4, 4)};
  for (std::size_t depth = 1; depth <= 3; ++depth) {
    const double ref = mean_reward_at_depth(env, start, corners[0], depth, 20000, 20);
    for (int c = 1; c < 4; ++c) {
      EXPECT_NEAR(mean_reward_at_depth(env, start, corners[c], depth, 20000, 20 + c), ref,
                  0.12)
          << "depth " << depth << " corner " << c;
    }
  }
}

TEST(GameOfLife, FourCornersGrid) {
  const auto g = four_corners_grid(5);
  EXPECT_EQ(g.alive_count(), 4u);
  EXPECT_TRUE(g.at(0, 0) && g.at(4, 0) && g.at(0, 4) && g.at(4, 4));
}

// ---- Layered Gaussian ----

TEST(LayeredGaussian, NearZeroStdGivesMeans) {
  LayeredGaussianSpec spec{{{0.0, 0.0}}, {{1e-9, 1e-9}}};
  const auto env = make_layered_gaussian(spec, 5);
  Rng rng(1);
  EXPECT_NEAR(env.step({}, 1, rng).reward, 0.0, 1e-6);
}

TEST(LayeredGaussian, DepthRewardsFollowSpecAndVanishBeyond) {
  LayeredGaussianSpec spec{{{1.0, 0.0}, {0.0, 0.0}}, {{1.0, 1.0}, {1.0, 1.0}}};
  const auto env = make_layered_gaussian(spec, 5);
  const int n = 100000;
  EXPECT_NEAR(mean_reward_at_depth(env, LayeredState{}, 0, 1, n, 3), 1.0, 0.01);
  EXPECT_NEAR(mean_reward_at_depth(env, LayeredState{}, 0, 2, n, 4), 0.0, 0.015);
  EXPECT_EQ(mean_reward_at_depth(env, LayeredState{}, 0, 3, 100, 5), 0.0);
}

TEST(LayeredGaussian, DepthStdMatchesSpec) {
  LayeredGaussianSpec spec{{{0.0}, {2.0}}, {{1.0}, {3.0}}};
  const auto env = make_layered_gaussian(spec, 3);
  Rng rng(6);
  double sum = 0.0, sum_sq = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const auto first = env.step({}, 0, rng);
    const double r = env.step(first.next, 0, rng).reward;
    sum += r;
    sum_sq += r * r;
  }
  const double mean = sum / n;
  EXPECT_NEAR(mean, 2.0, 3 * 3.0 / std::sqrt(n));
  EXPECT_NEAR(std::sqrt(sum_sq / n - mean * mean), 3.0, 0.03);
}

TEST(LayeredGaussian, HorizonShorterThanDepthRejected) {
  LayeredGaussianSpec spec{{{0.0}, {0.0}, {0.0}}, {{1.0}, {1.0}, {1.0}}};
  EXPECT_THROW(make_layered_gaussian(spec, 2), std::invalid_argument);
}

TEST(LayeredGaussian, SpecValidation) {
  EXPECT_THROW((LayeredGaussianSpec{{{0.0, 1.0}}, {{1.0}}}.validate()), std::invalid_argument);
  EXPECT_THROW((LayeredGaussianSpec{{{0.0}}, {{0.0}}}.validate()), std::invalid_argument);
}

}  // namespace
}  // namespace aupo
