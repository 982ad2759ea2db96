#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "aupo/rng.hpp"
#include "aupo/scores.hpp"
#include "aupo/stats.hpp"

namespace aupo {
namespace {

PerformanceTable table_of(const std::vector<std::vector<double>>& rows) {
  PerformanceTable t(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < rows[i].size(); ++k) t.perf(i, k) = rows[i][k];
  return t;
}

void expect_matrix(const ScoreMatrix& m, const std::vector<std::vector<double>>& expected) {
  ASSERT_EQ(m.rows(), expected.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      EXPECT_DOUBLE_EQ(m(i, j), expected[i][j]) << i << "," << j;
}

TEST(ReportCi, NotationExample) {
  const std::vector<double> s{1, 3};
  const auto ci = report_ci(s, 2.0 * normal_cdf(1.0) - 1.0);
  EXPECT_DOUBLE_EQ(ci.mean, 2.0);
  EXPECT_NEAR(ci.half_width, 1.0, 1e-12);
}

TEST(ReportCi, NinetyNinePercent) {
  const std::vector<double> s{0, 2};
  const auto ci = report_ci(s, 0.99);
  EXPECT_DOUBLE_EQ(ci.mean, 1.0);
  EXPECT_NEAR(ci.half_width, 2.575829, 1e-6);
}

TEST(ReportCi, ConstantSamplesAndTooFew) {
  const std::vector<double> s{4, 4, 4};
  EXPECT_EQ(report_ci(s, 0.99).half_width, 0.0);
  EXPECT_THROW(report_ci(std::vector<double>{1}, 0.99), std::invalid_argument);
}

TEST(Pairings, IdenticalRowsGiveZero) {
  const auto m = pairings_matrix(table_of({{1, 2}, {1, 2}}));
  expect_matrix(m, {{0, 0}, {0, 0}});
}

TEST(Pairings, SingleTaskWinner) {
  const auto m = pairings_matrix(table_of({{3}, {1}}));
  expect_matrix(m, {{0, 1}, {-1, 0}});
  EXPECT_EQ(agent_scores(m), (std::vector<double>{1, -1}));
}

TEST(Pairings, SplitTasksCancel) {
  const auto m = pairings_matrix(table_of({{3, 0}, {1, 2}}));
  EXPECT_EQ(m(0, 1), 0.0);
}

TEST(Relative, HandExamples) {
  EXPECT_DOUBLE_EQ(relative_matrix(table_of({{2}, {1}}))(0, 1), 0.5);
  expect_matrix(relative_matrix(table_of({{5, 1}, {5, 1}})), {{0, 0}, {0, 0}});
  expect_matrix(relative_matrix(table_of({{0}, {0}})), {{0, 0}, {0, 0}});
}

TEST(Scores, ThreeAgentRowMean) {
  ScoreMatrix m(3, 3);
  m(0, 1) = 1;
  m(1, 0) = -1;
  m(0, 2) = 0.5;
  m(2, 0) = -0.5;
  EXPECT_DOUBLE_EQ(agent_scores(m)[0], 0.75);
  EXPECT_EQ(agent_scores(ScoreMatrix(3, 3)), (std::vector<double>{0, 0, 0}));
}

TEST(Scores, HandTableThreeAgentsTwoTasks) {
  const auto t = table_of({{1, 4}, {2, 2}, {0, 4}});
  const auto pairings = pairings_matrix(t);
  expect_matrix(pairings, {{0, 0, 0.5}, {0, 0, 0}, {-0.5, 0, 0}});
  EXPECT_EQ(agent_scores(pairings), (std::vector<double>{0.25, 0, -0.25}));
  const auto relative = relative_matrix(t);
  expect_matrix(relative, {{0, 0, 0.5}, {0, 0, 0.25}, {-0.5, -0.25, 0}});
  EXPECT_EQ(agent_scores(relative), (std::vector<double>{0.25, 0.125, -0.375}));
}

TEST(Scores, RandomTablesAreAntisymmetricAndBounded) {
  Rng rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng.below(6);
    const std::size_t m = 1 + rng.below(5);
    PerformanceTable t(n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < m; ++k)
        t.perf(i, k) = rng.bernoulli(0.1) ? 0.0 : std::abs(rng.normal(0.0, 10.0));
    for (const auto& mat : {pairings_matrix(t), relative_matrix(t)}) {
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_EQ(mat(i, i), 0.0);
        for (std::size_t j = 0; j < n; ++j) {
          EXPECT_DOUBLE_EQ(mat(i, j), -mat(j, i));
          EXPECT_LE(std::abs(mat(i, j)), 1.0);
        }
      }
      for (double s : agent_scores(mat)) EXPECT_LE(std::abs(s), 1.0);
    }
  }
}

TEST(Scores, PairingsInvariantUnderAffineAndRelativeUnderScaling) {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    PerformanceTable t(4, 3);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t k = 0; k < 3; ++k) t.perf(i, k) = rng.normal();
    PerformanceTable affine = t, scaled = t;
    for (std::size_t i = 0; i < 4; ++i) {
      affine.perf(i, 1) = 3.0 * t.perf(i, 1) + 7.0;
      scaled.perf(i, 2) = 2.5 * t.perf(i, 2);
    }
    const auto a = pairings_matrix(t);
    const auto b = pairings_matrix(affine);
    const auto r = relative_matrix(t);
    const auto s = relative_matrix(scaled);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        EXPECT_EQ(a(i, j), b(i, j));
        EXPECT_NEAR(r(i, j), s(i, j), 1e-12);
      }
  }
}

TEST(PerformanceTable, Validation) {
  EXPECT_THROW(table_of({{1}}).validate(), std::invalid_argument);
  auto t = table_of({{1}, {NAN}});
  EXPECT_THROW(t.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace aupo
