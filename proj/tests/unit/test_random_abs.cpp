#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "aupo/env/gaussian_mab.hpp"
#include "aupo/random_abs.hpp"

namespace aupo {
namespace {

TEST(RandomAbs, ExtremeProbabilitiesEqualGreedy) {
  const auto mab = make_gaussian_mab({0.0, 0.1, 0.2, 0.3, 0.4}, {1, 1, 1, 1, 1});
  for (double p : {0.0, 1.0}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      Rng search_rng(seed);
      const auto r = search(mab, MabState{}, MctsConfig{1.0, 40}, 0, search_rng);
      Rng a(seed), b(seed);
      EXPECT_EQ(random_abs_decide(r.tree, RandomAbsParams{p}, a), greedy_decision(r.tree, b));
    }
  }
}

TEST(RandomAbs, PairGroupedAtRate) {
  std::vector<ActionStats> root{{3, 1.0}, {3, 2.0}};
  Rng rng(2);
  int grouped = 0;
  for (int t = 0; t < 10000; ++t) {
    grouped += random_abstraction(root, RandomAbsParams{0.5}, rng).grouped(0, 1) ? 1 : 0;
  }
  EXPECT_NEAR(grouped, 5000, 150);
}

TEST(RandomAbs, RelationIsReflexiveAndSymmetric) {
  std::vector<ActionStats> root(7, ActionStats{2, 1.0});
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto abs = random_abstraction(root, RandomAbsParams{0.3}, rng);
    for (std::size_t i = 0; i < root.size(); ++i) {
      EXPECT_TRUE(abs.grouped(i, i));
      for (std::size_t j = 0; j < root.size(); ++j) {
        EXPECT_EQ(abs.grouped(i, j), abs.grouped(j, i));
      }
    }
  }
}

TEST(RandomAbs, NoDrawsAtExtremes) {
  std::vector<ActionStats> root(5, ActionStats{2, 1.0});
  for (double p : {0.0, 1.0}) {
    Rng used(4), fresh(4);
    random_abstraction(root, RandomAbsParams{p}, used);
    EXPECT_EQ(used(), fresh());
  }
}

TEST(RandomAbs, RejectsBadProbability) {
  std::vector<ActionStats> root(2, ActionStats{1, 0.0});
  Rng rng(5);
  EXPECT_THROW(random_abstraction(root, RandomAbsParams{1.2}, rng), std::invalid_argument);
}

}  // namespace
}  // namespace aupo
