//
// Copyright 2026 The pdmedian Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "pdmedian/ptr.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "pdmedian/directions.h"
#include "pdmedian/outlyingness.h"
#include "pdmedian/rng.h"

namespace pdmedian {
namespace {

PrivacyParams Params(double epsilon, double delta, double eta, double tau) {
  PrivacyParams p;
  p.epsilon = epsilon;
  p.delta = delta;
  p.eta = eta;
  p.tau = tau;
  return p;
}

TEST(PrivacyParamsTest, Validate) {
  EXPECT_TRUE(Params(10, 0.5, 0.1, 1).Validate().ok());
  EXPECT_FALSE(Params(0, 0.1, 0.1, 1).Validate().ok());
  EXPECT_FALSE(Params(1, 0.0, 0.1, 1).Validate().ok());
  EXPECT_FALSE(Params(1, 0.6, 0.1, 1).Validate().ok());
  EXPECT_FALSE(Params(1, 0.1, 0.0, 1).Validate().ok());
  EXPECT_FALSE(Params(1, 0.1, 0.1, -1).Validate().ok());
}

TEST(EtaRuleTest, Formulas) {
  EXPECT_DOUBLE_EQ(LogEtaRule(5000), 30 * std::log(5000.0) / 5000);
  EXPECT_DOUBLE_EQ(LogEtaRule(100, 2), 2 * std::log(100.0) / 100);
  EXPECT_DOUBLE_EQ(HeavyTailEtaRule(100, 4, 1),
                   std::max(8.0, 2 * std::log(100.0)) / 100);
  EXPECT_DOUBLE_EQ(HeavyTailEtaRule(100, 16, 1), 64.0 / 100);
}

TEST(LaplaceTest, InverseCdfExamples) {
  EXPECT_EQ(LaplaceFromUniform(0.0), 0.0);
  EXPECT_NEAR(LaplaceFromUniform(0.25), 0.6931471805599453, 1e-15);
  EXPECT_NEAR(LaplaceFromUniform(-0.25), -0.6931471805599453, 1e-15);
}

TEST(LaplaceTest, Moments) {
  Rng rng(2024);
  const int n = 100000;
  double sum = 0, sum_sq = 0;
  for (int i = 0; i < n; ++i) {
    const double w = SampleStandardLaplace(rng);
    ASSERT_TRUE(std::isfinite(w));
    sum += w;
    sum_sq += w * w;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  EXPECT_GT(mean, -0.02);
  EXPECT_LT(mean, 0.02);
  EXPECT_GT(var, 1.9);
  EXPECT_LT(var, 2.1);
}

ProjectedStats UnitStats(int size) {
  ProjectedStats s;
  s.location = Eigen::VectorXd::Zero(size);
  s.scale = Eigen::VectorXd::Ones(size);
  s.min_scale = 1;
  s.max_scale = 1;
  s.location_spread = 0;
  s.center = Eigen::VectorXd::Zero(1);
  s.location_radius = 0;
  return s;
}

// The volume ratio written out term by term.
double VolumeRatioOracle(double eps, double eta, double tau, double radius,
                         double smin, double smax, int d) {
  const double head = std::exp(-eps * tau / (4 * eta) +
                               eps * (0.5 + radius / (4 * smin * eta)) + d);
  return head *
         std::pow((smax * (tau + 2 * eta) + radius) / (smin * 4 * eta * d * eps),
                  d);
}

TEST(VolumeRatioTest, Examples) {
  const ProjectedStats s = UnitStats(1);
  EXPECT_NEAR(VolumeRatio(s, Params(10, 0.1, 0.1, 1), 1),
              std::exp(-19.0) * 0.3, 1e-20);
  ProjectedStats zero = s;
  zero.min_scale = 0;
  EXPECT_EQ(VolumeRatio(zero, Params(10, 0.1, 0.1, 1), 1), INFINITY);
  // Halving eta changes the value as the formula dictates.
  EXPECT_NEAR(VolumeRatio(s, Params(10, 0.1, 0.05, 1), 1) /
                  VolumeRatioOracle(10, 0.05, 1, 0, 1, 1, 1),
              1.0, 1e-12);
  EXPECT_LT(VolumeRatio(s, Params(10, 0.1, 0.05, 1), 1),
            VolumeRatio(s, Params(10, 0.1, 0.1, 1), 1));
}

TEST(VolumeRatioTest, MatchesOracleOnGeneralStats) {
  ProjectedStats s = UnitStats(3);
  s.min_scale = 0.6;
  s.max_scale = 0.8;
  s.location_radius = 0.05;
  for (int d : {1, 2, 5, 10}) {
    EXPECT_NEAR(VolumeRatio(s, Params(10, 0.1, 0.1, 1), d) /
                    VolumeRatioOracle(10, 0.1, 1, 0.05, 0.6, 0.8, d),
                1.0, 1e-10);
  }
}

TEST(ThresholdTest, Examples) {
  EXPECT_TRUE(ThresholdTestPasses(5, 0.0, Params(1, 0.05, 0.1, 1)));
  EXPECT_FALSE(ThresholdTestPasses(0, 0.0, Params(1, 0.5, 0.1, 1)));
  EXPECT_TRUE(ThresholdTestPasses(0, 5.0, Params(1, 0.05, 0.1, 1)));
  EXPECT_FALSE(ThresholdTestPasses(4, 0.0, Params(1, 0.05, 0.1, 1)));
}

TEST(ThresholdTest, MonotoneInSafetyMarginWithSharedNoise) {
  Rng rng(3);
  const PrivacyParams p = Params(2, 0.01, 0.1, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const double w = SampleStandardLaplace(rng);
    for (int sm = 0; sm < 10; ++sm) {
      EXPECT_LE(ThresholdTestPasses(sm, w, p), ThresholdTestPasses(sm + 1, w, p));
    }
  }
}

TEST(ThresholdTest, PassProbabilityMatchesEmpiricalRate) {
  const PrivacyParams p = Params(1, 0.05, 0.1, 1);
  for (int sm : {0, 3, 5, 8}) {
    Rng rng(100 + sm);
    int passes = 0;
    const int trials = 40000;
    for (int i = 0; i < trials; ++i) {
      const TestOutcome t = RunThresholdTest(sm, p, rng);
      EXPECT_EQ(t.passed, ThresholdTestPasses(sm, t.noise, p));
      EXPECT_EQ(t.safety_margin, sm);
      passes += t.passed;
    }
    const double prob = PassProbability(sm, p);
    EXPECT_NEAR(static_cast<double>(passes) / trials, prob, 0.01) << sm;
  }
  // With sm = 0 the pass probability is delta.
  EXPECT_NEAR(PassProbability(0, p), 0.05, 1e-12);
}

Dataset Gaussian(int n, int d, uint64_t seed) {
  Rng rng(seed);
  std::normal_distribution<double> normal;
  Dataset x(n, d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) x(i, j) = normal(rng);
  }
  return x;
}

absl::StatusOr<SafetyMarginResult> Margin(const Dataset& data,
                                          const DirectionSet& dirs,
                                          const PrivacyParams& p) {
  auto proj = SortedProjections::Compute(data, dirs);
  if (!proj.ok()) return proj.status();
  auto stats = ComputeProjectedStats(*proj, EstimatorPair::MedianMad());
  if (!stats.ok()) return stats.status();
  return SafetyMarginLowerBound(*proj, *stats, p, EstimatorPair::MedianMad());
}

TEST(SafetyMarginTest, SplitDatasetHasZeroMargin) {
  const int n = 1000;
  Dataset data(n, 1);
  for (int i = 0; i < n; ++i) data(i, 0) = i < n / 2 ? 0.0 : 1e6;
  auto dirs = DirectionSet::Sample(1, 1, 1);
  const PrivacyParams p = Params(10, 10.0 / n, LogEtaRule(n), 1);
  auto r = Margin(data, *dirs, p);
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(r->safety_margin, 0);
  // Half the sample sits on the median, so MAD is zero as well.
  EXPECT_TRUE(r->reason == StopReason::kDeviation ||
              r->reason == StopReason::kDegenerate);
}

TEST(SafetyMarginTest, ConstantDataHasZeroMargin) {
  Dataset data = Eigen::MatrixXd::Constant(50, 2, 1.0);
  auto dirs = DirectionSet::Sample(10, 2, 1);
  auto r = Margin(data, *dirs, Params(10, 0.01, 0.1, 1));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->safety_margin, 0);
  EXPECT_EQ(r->reason, StopReason::kDegenerate);
  EXPECT_EQ(r->volume_ratio, INFINITY);
}

TEST(SafetyMarginTest, RequiresFiveRows) {
  auto dirs = DirectionSet::Sample(10, 2, 1);
  EXPECT_FALSE(Margin(Gaussian(4, 2, 1), *dirs, Params(10, 0.01, 0.1, 1)).ok());
}

TEST(SafetyMarginTest, GaussianMarginClearsThreshold) {
  const int n = 5000;
  const PrivacyParams p = Params(10, 10.0 / n, LogEtaRule(n), 1);
  const double needed = std::ceil(std::log(1 / (2 * p.delta)));
  auto dirs = DirectionSet::Sample(500, 2, 4);
  for (uint64_t seed = 0; seed < 3; ++seed) {
    auto r = Margin(Gaussian(n, 2, seed), *dirs, p);
    ASSERT_TRUE(r.ok());
    EXPECT_GE(r->safety_margin, needed);
    EXPECT_LT(r->volume_ratio, p.delta);
    ASSERT_TRUE(r->last_report.has_value());
    EXPECT_EQ(r->safety_margin, r->k_stop - 2);
  }
}

TEST(SafetyMarginTest, OutlierInjectionNeverIncreasesMargin) {
  const int n = 400;
  const PrivacyParams p = Params(10, 10.0 / n, LogEtaRule(n), 1);
  auto dirs = DirectionSet::Sample(100, 2, 5);
  for (uint64_t seed = 0; seed < 5; ++seed) {
    Dataset data = Gaussian(n, 2, 50 + seed);
    auto before = Margin(data, *dirs, p);
    data.row(seed) << 1e6, -1e6;
    auto after = Margin(data, *dirs, p);
    ASSERT_TRUE(before.ok() && after.ok());
    EXPECT_LE(after->safety_margin, before->safety_margin);
  }
}

TEST(SafetyMarginTest, TighterDeviationThresholdNeverIncreasesMargin) {
  const int n = 400;
  const PrivacyParams p = Params(10, 10.0 / n, LogEtaRule(n), 1);
  auto dirs = DirectionSet::Sample(100, 2, 6);
  const Dataset data = Gaussian(n, 2, 7);
  auto proj = SortedProjections::Compute(data, *dirs);
  auto stats = ComputeProjectedStats(*proj, EstimatorPair::MedianMad());
  SafetyMarginOptions half;
  half.deviation_threshold_scale = 0.5;
  auto full = SafetyMarginLowerBound(*proj, *stats, p, EstimatorPair::MedianMad());
  auto tight = SafetyMarginLowerBound(*proj, *stats, p,
                                      EstimatorPair::MedianMad(), half);
  ASSERT_TRUE(full.ok() && tight.ok());
  EXPECT_LE(tight->safety_margin, full->safety_margin);
}

TEST(PtrMechanismTest, ComposesTestAndRelease) {
  using Mechanism = PtrMechanism<int, double>;
  const auto release = [](const int& data, Rng&) { return data * 1.5; };
  Rng rng(9);
  Mechanism never([](const int&) { return 0.0; }, release);
  Mechanism always([](const int&) { return 1.0; }, release);
  for (int i = 0; i < 100; ++i) {
    EXPECT_FALSE(never(4, rng).has_value());
    auto out = always(4, rng);
    ASSERT_TRUE(out.has_value());
    EXPECT_EQ(*out, 6.0);
  }
  Mechanism coin([](const int&) { return 0.5; }, release);
  int abstain = 0;
  for (int i = 0; i < 10000; ++i) abstain += !coin(4, rng).has_value();
  EXPECT_GT(abstain, 4700);
  EXPECT_LT(abstain, 5300);
}

}  // namespace
}  // namespace pdmedian
