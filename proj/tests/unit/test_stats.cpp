#include <gtest/gtest.h>

#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <vector>

#include "aupo/rng.hpp"
#include "aupo/stats.hpp"

namespace aupo {
namespace {

double boost_critical_value(double q) {
  const boost::math::normal_distribution<double> standard;
  return boost::math::quantile(standard, 0.5 + 0.5 * q);
}

TEST(NormalQuantile, MatchesBoostAcrossDomain) {
  const boost::math::normal_distribution<double> standard;
  for (double p : {1e-300, 1e-20, 1e-10, 1e-5, 0.001, 0.02425, 0.1, 0.3, 0.5, 0.7, 0.9,
                   0.97575, 0.999, 1 - 1e-6, 1 - 1e-12}) {
    const double expected = boost::math::quantile(standard, p);
    EXPECT_NEAR(normal_quantile(p), expected, 1e-12 * std::max(1.0, std::abs(expected)))
        << "p=" << p;
  }
}

TEST(CriticalValue, MatchesBoostOnGrid) {
  for (double q = 0.01; q < 0.9995; q += 0.0123) {
    EXPECT_NEAR(critical_value(q), boost_critical_value(q), 1e-10) << "q=" << q;
  }
  EXPECT_NEAR(critical_value(0.95), 1.959964, 1e-6);
  EXPECT_NEAR(critical_value(0.99), 2.575829, 1e-6);
}

TEST(CriticalValue, RejectsDegenerateLevels) {
  EXPECT_THROW(critical_value(0.0), std::domain_error);
  EXPECT_THROW(critical_value(1.0), std::domain_error);
}

TEST(NormalCdf, MatchesBoost) {
  const boost::math::normal_distribution<double> standard;
  for (double x = -8; x <= 8; x += 0.37) {
    EXPECT_NEAR(normal_cdf(x), boost::math::cdf(standard, x), 1e-15);
  }
}

TEST(MeanInterval, DegenerateLevels) {
  const std::vector<double> s{1, 4, 2};
  EXPECT_EQ(mean_conf_interval(s, 0.0), Interval::point(7.0 / 3.0));
  EXPECT_EQ(mean_conf_interval(s, 1.0), Interval::whole());
}

TEST(MeanInterval, HandExample) {
  const std::vector<double> s{0, 2};
  const auto i = mean_conf_interval(s, 0.95);
  EXPECT_NEAR(i.lo, -0.959964, 1e-6);
  EXPECT_NEAR(i.hi, 2.959964, 1e-6);
}

TEST(MeanInterval, SingleSampleIsWholeLine) {
  const std::vector<double> s{3};
  EXPECT_EQ(mean_conf_interval(s, 0.5), Interval::whole());
  EXPECT_EQ(mean_conf_interval(s, 0.0), Interval::point(3.0));
}

TEST(MeanInterval, EmptySampleThrows) {
  EXPECT_THROW(mean_conf_interval(std::vector<double>{}, 0.9), std::invalid_argument);
  EXPECT_THROW(std_conf_interval(std::vector<double>{}, 0.9), std::invalid_argument);
}

TEST(MeanInterval, WidthGrowsWithLevel) {
  const std::vector<double> s{0.3, -1.2, 2.2, 0.7, 0.1};
  double last = 0.0;
  for (double q = 0.05; q < 1.0; q += 0.05) {
    const double w = mean_conf_interval(s, q).width();
    EXPECT_GE(w, last);
    last = w;
  }
}

TEST(MeanInterval, WidthShrinksLikeInverseRootN) {
  Rng rng(3);
  std::vector<double> small(100), large(10000);
  for (auto& x : small) x = rng.normal();
  for (auto& x : large) x = rng.normal();
  const double ratio =
      mean_conf_interval(small, 0.9).width() / mean_conf_interval(large, 0.9).width();
  EXPECT_NEAR(ratio, 10.0, 1.5);
}

TEST(StdInterval, ConstantSamplesCollapseToZero) {
  const std::vector<double> s{3, 3, 3};
  EXPECT_EQ(std_conf_interval(s, 0.95), Interval::point(0.0));
}

TEST(StdInterval, HandExample) {
  const std::vector<double> s{0, 2};
  const auto i = std_conf_interval(s, 0.95);
  EXPECT_NEAR(i.lo, 0.028310, 1e-6);
  EXPECT_NEAR(i.hi, 2.800117, 1e-6);
}

TEST(StdInterval, DegenerateLevelsAndFloor) {
  const std::vector<double> s{0, 2};
  EXPECT_EQ(std_conf_interval(s, 1.0), Interval::whole());
  EXPECT_EQ(std_conf_interval(s, 0.0), Interval::point(std::sqrt(2.0)));
  EXPECT_EQ(std_conf_interval(s, 0.999).lo, 0.0);
}

TEST(Overlap, ClosedIntervals) {
  EXPECT_TRUE(intervals_overlap({0, 1}, {1, 2}));
  EXPECT_FALSE(intervals_overlap({0, 1}, {2, 3}));
  EXPECT_TRUE(intervals_overlap(Interval::whole(), {5, 6}));
  EXPECT_TRUE(intervals_overlap(Interval::point(1), Interval::point(1)));
}

TEST(SampleMoments, BesselCorrected) {
  const std::vector<double> s{1, 2, 3, 4};
  const auto m = SampleMoments::of(s);
  EXPECT_EQ(m.count, 4u);
  EXPECT_DOUBLE_EQ(m.mean, 2.5);
  EXPECT_NEAR(m.stddev, std::sqrt(5.0 / 3.0), 1e-15);
}

TEST(KnownSigmaInterval, UsesGivenSigma) {
  const auto i = known_sigma_mean_interval(1.0, 2.0, 16, 0.95);
  EXPECT_NEAR(i.hi - 1.0, 1.959964 * 0.5, 1e-6);
}

}  // namespace
}  // namespace aupo
