#include <gtest/gtest.h>

#include <vector>

#include "aupo/env/gaussian_mab.hpp"
#include "aupo/mdp.hpp"
#include "test_models.hpp"

namespace aupo {
namespace {

Trajectory with_rewards(std::vector<double> rewards) {
  Trajectory t;
  for (double r : rewards) t.steps.push_back({0, r, false});
  return t;
}

TEST(EpisodeReturn, EmptyTrajectoryIsZero) {
  EXPECT_EQ(episode_return(with_rewards({}), 1.0), 0.0);
}

TEST(EpisodeReturn, UndiscountedIsPlainSum) {
  EXPECT_EQ(episode_return(with_rewards({1, 2, 3}), 1.0), 6.0);
}

TEST(EpisodeReturn, DiscountsFromIndexZero) {
  EXPECT_DOUBLE_EQ(episode_return(with_rewards({1, 2}), 0.5), 2.0);
}

TEST(TruncatedReturn, SumsFirstDepthRewards) {
  const std::vector<double> r{1, 2, 3};
  EXPECT_EQ(truncated_return(r, 2), 3.0);
  EXPECT_EQ(truncated_return(r, 5), 6.0);
  EXPECT_EQ(truncated_return(std::vector<double>{}, 3), 0.0);
}

TEST(TruncatedReturn, MatchesEpisodeReturnOfPrefix) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> r(rng.below(8));
    for (auto& x : r) x = rng.normal();
    const std::size_t depth = 1 + rng.below(10);
    const std::size_t keep = std::min(depth, r.size());
    const std::vector<double> prefix(r.begin(), r.begin() + static_cast<long>(keep));
    EXPECT_DOUBLE_EQ(truncated_return(r, depth), episode_return(with_rewards(prefix), 1.0));
  }
}

TEST(RunEpisode, BanditEndsAfterOneStep) {
  const auto mab = make_gaussian_mab({0.0, 1.0}, {1.0, 1.0});
  Rng rng(1);
  const auto t = run_episode(mab, [](const auto&, int, Rng&) { return ActionId{1}; }, rng);
  ASSERT_EQ(t.depth(), 1u);
  EXPECT_TRUE(t.steps.back().ended);
}

TEST(RunEpisode, HorizonCutsNeverEndingModel) {
  testing::ChainModel chain;
  Rng rng(1);
  const auto t = run_episode(chain, [](const auto&, int, Rng&) { return ActionId{0}; }, rng);
  EXPECT_EQ(t.depth(), 50u);
  EXPECT_EQ(episode_return(t, 1.0), 50.0);
}

TEST(RunEpisode, StepsLeftCountsDown) {
  testing::ChainModel chain;
  chain.horizon_steps = 4;
  std::vector<int> seen;
  Rng rng(1);
  run_episode(chain, [&](const auto&, int left, Rng&) {
    seen.push_back(left);
    return ActionId{0};
  }, rng);
  EXPECT_EQ(seen, (std::vector<int>{4, 3, 2, 1}));
}

TEST(RunEpisode, IllegalActionIsContractViolation) {
  testing::ChainModel chain;
  Rng rng(1);
  EXPECT_THROW(run_episode(chain, [](const auto&, int, Rng&) { return ActionId{2}; }, rng),
               ContractViolation);
}

TEST(RunEpisode, SameSeedSameRewards) {
  const auto mab = make_gaussian_mab({0.0, 1.0, 2.0}, {1.0, 1.0, 1.0});
  auto agent = [](const auto&, int, Rng& r) { return ActionId{r.below(3)}; };
  Rng a(42), b(42);
  EXPECT_EQ(run_episode(mab, agent, a).rewards(), run_episode(mab, agent, b).rewards());
}

}  // namespace
}  // namespace aupo
