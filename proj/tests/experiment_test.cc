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

#include "pdmedian/experiment.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gtest/gtest.h"

namespace pdmedian {
namespace {

ResultRow Row(std::string estimator, int rep, std::optional<double> sq) {
  ResultRow r;
  r.estimator = std::move(estimator);
  r.distribution = "gaussian";
  r.d = 2;
  r.rep = rep;
  r.released = sq.has_value();
  r.sq_error = sq;
  return r;
}

TEST(NamesTest, DistributionsRoundTrip) {
  for (Distribution d : {Distribution::kGaussian, Distribution::kContaminated,
                         Distribution::kCauchy}) {
    auto parsed = ParseDistribution(DistributionName(d));
    ASSERT_TRUE(parsed.ok());
    EXPECT_EQ(*parsed, d);
  }
  EXPECT_FALSE(ParseDistribution("uniform").ok());
}

TEST(NamesTest, EtaRulesAndEstimators) {
  EXPECT_EQ(*ParseEtaRule("log"), EtaRule::kLog);
  EXPECT_EQ(*ParseEtaRule("heavy-tail"), EtaRule::kHeavyTail);
  EXPECT_EQ(*ParseEtaRule("auto"), EtaRule::kAuto);
  EXPECT_FALSE(ParseEtaRule("other").ok());
  EXPECT_EQ(EstimatorName(Method::kPrivatePd, EstimatorPair::MedianMad()),
            "private_pd_med_mad");
  EXPECT_EQ(EstimatorName(Method::kNonPrivatePd, EstimatorPair::Trimmed(0.1)),
            "nonprivate_pd_tm_tad");
  EXPECT_EQ(EstimatorName(Method::kSampleMean, EstimatorPair::MedianMad()),
            "sample_mean");
}

TEST(ExperimentConfigTest, ResolveParams) {
  ExperimentConfig c;
  c.n = 2000;
  const PrivacyParams g = c.ResolveParams(Distribution::kGaussian, 2);
  EXPECT_DOUBLE_EQ(g.delta, 10.0 / 2000);
  EXPECT_DOUBLE_EQ(g.eta, LogEtaRule(2000, 30));
  EXPECT_EQ(g.epsilon, 10);
  EXPECT_EQ(g.tau, 1);
  const PrivacyParams cauchy = c.ResolveParams(Distribution::kCauchy, 2);
  EXPECT_DOUBLE_EQ(cauchy.eta, HeavyTailEtaRule(2000, 2, 30));
  c.eta_rule = EtaRule::kFixed;
  c.eta = 0.3;
  c.delta = 0.01;
  EXPECT_EQ(c.ResolveParams(Distribution::kCauchy, 2).eta, 0.3);
  EXPECT_EQ(c.ResolveParams(Distribution::kCauchy, 2).delta, 0.01);
}

TEST(ExperimentConfigTest, Validate) {
  ExperimentConfig c;
  EXPECT_TRUE(c.Validate().ok());
  c.reps = 0;
  EXPECT_FALSE(c.Validate().ok());
  c = ExperimentConfig();
  c.dims = {};
  EXPECT_FALSE(c.Validate().ok());
  c = ExperimentConfig();
  c.n = 4;
  EXPECT_FALSE(c.Validate().ok());
  c = ExperimentConfig();
  c.contamination_fraction = 0.5;
  EXPECT_FALSE(c.Validate().ok());
  c = ExperimentConfig();
  c.delta = 0.9;
  EXPECT_FALSE(c.Validate().ok());
}

TEST(SampleMeanTest, PointMassHasZeroError) {
  const Eigen::Vector3d theta(1.5, -2, 7);
  Dataset data = theta.transpose().replicate(20, 1);
  const Eigen::VectorXd m = SampleMean(data);
  const double sq = (m - theta).squaredNorm();
  EXPECT_EQ(sq, 0.0);
  const std::vector<ResultRow> rows = {Row("sample_mean", 0, sq)};
  const auto cells = Summarize(rows);
  ASSERT_EQ(cells.size(), 1u);
  ASSERT_TRUE(cells[0].ermse.has_value());
  EXPECT_EQ(*cells[0].ermse, 0.0);
}

TEST(SummarizeTest, ExcludesAbstentionsAndReportsRate) {
  const std::vector<ResultRow> rows = {
      Row("a", 0, 1.0), Row("a", 1, 4.0), Row("a", 2, std::nullopt),
      Row("a", 3, 7.0), Row("b", 0, std::nullopt), Row("b", 1, std::nullopt)};
  const auto cells = Summarize(rows);
  ASSERT_EQ(cells.size(), 2u);
  EXPECT_EQ(cells[0].estimator, "a");
  EXPECT_EQ(cells[0].reps, 4);
  EXPECT_EQ(cells[0].released, 3);
  EXPECT_DOUBLE_EQ(*cells[0].ermse, 2.0);
  EXPECT_DOUBLE_EQ(cells[0].abstain_rate, 0.25);
  EXPECT_EQ(cells[1].reps, 2);
  EXPECT_FALSE(cells[1].ermse.has_value());
  EXPECT_EQ(cells[1].abstain_rate, 1.0);
  for (const auto& c : cells) {
    EXPECT_DOUBLE_EQ(c.abstain_rate + static_cast<double>(c.released) / c.reps,
                     1.0);
  }
}

ExperimentConfig Small() {
  ExperimentConfig c;
  c.n = 200;
  c.dims = {2};
  c.reps = 3;
  c.distributions = {Distribution::kGaussian, Distribution::kContaminated};
  c.directions.n_dirs = 50;
  c.sampler.steps = 200;
  return c;
}

TEST(RunExperimentTest, ProducesSortedRowsForEveryCell) {
  auto r = RunExperiment(Small());
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->status.ok());
  ASSERT_EQ(r->rows.size(), 18u);
  EXPECT_TRUE(std::is_sorted(
      r->rows.begin(), r->rows.end(), [](const ResultRow& a, const ResultRow& b) {
        return std::tie(a.estimator, a.distribution, a.d, a.rep) <
               std::tie(b.estimator, b.distribution, b.d, b.rep);
      }));
  EXPECT_EQ(r->summary.size(), 6u);
  for (const ResultRow& row : r->rows) {
    EXPECT_EQ(row.wall_ms, 0.0);
    EXPECT_EQ(row.released, row.sq_error.has_value());
  }
}

TEST(RunExperimentTest, DeterministicAcrossThreadCounts) {
  ExperimentConfig one = Small();
  one.threads = 1;
  ExperimentConfig three = Small();
  three.threads = 3;
  auto a = RunExperiment(one);
  auto b = RunExperiment(three);
  auto c = RunExperiment(one);
  ASSERT_TRUE(a.ok() && b.ok() && c.ok());
  EXPECT_EQ(a->rows, b->rows);
  EXPECT_EQ(a->rows, c->rows);
  ExperimentConfig other = Small();
  other.seed = 99;
  auto d = RunExperiment(other);
  ASSERT_TRUE(d.ok());
  EXPECT_NE(a->rows, d->rows);
}

TEST(RunExperimentTest, PrivateAndNonPrivateShareSeeds) {
  auto r = RunExperiment(Small());
  ASSERT_TRUE(r.ok());
  for (const ResultRow& p : r->rows) {
    if (p.estimator != "private_pd_med_mad") continue;
    const auto np = std::find_if(r->rows.begin(), r->rows.end(),
                                 [&](const ResultRow& q) {
                                   return q.estimator == "nonprivate_pd_med_mad" &&
                                          q.distribution == p.distribution &&
                                          q.d == p.d && q.rep == p.rep;
                                 });
    ASSERT_NE(np, r->rows.end());
    EXPECT_EQ(np->seed, p.seed);
  }
}

TEST(RunExperimentTest, RecordsWallTimeWhenAsked) {
  ExperimentConfig c = Small();
  c.record_wall_time = true;
  c.methods = {Method::kNonPrivatePd};
  auto r = RunExperiment(c);
  ASSERT_TRUE(r.ok());
  for (const ResultRow& row : r->rows) EXPECT_GT(row.wall_ms, 0.0);
}

TEST(RunExperimentTest, SampleMeanErmseMatchesTheory) {
  ExperimentConfig c;
  c.n = 2000;
  c.dims = {2, 5};
  c.reps = 50;
  c.methods = {Method::kSampleMean};
  c.distributions = {Distribution::kGaussian, Distribution::kContaminated};
  auto r = RunExperiment(c);
  ASSERT_TRUE(r.ok());
  for (const CellSummary& cell : r->summary) {
    ASSERT_TRUE(cell.ermse.has_value());
    const double d = cell.d;
    if (cell.distribution == "gaussian") {
      const double rmse = std::sqrt(d / c.n);
      EXPECT_GE(*cell.ermse, 0.7 * rmse);
      EXPECT_LE(*cell.ermse, 1.3 * rmse);
    } else {
      const double bias = 0.25 * 5 * std::sqrt(d);
      EXPECT_GE(*cell.ermse, 0.9 * bias);
      EXPECT_LE(*cell.ermse, 1.1 * bias);
    }
  }
}

TEST(RunExperimentTest, RejectsInvalidConfig) {
  ExperimentConfig c = Small();
  c.reps = 0;
  EXPECT_FALSE(RunExperiment(c).ok());
}

}  // namespace
}  // namespace pdmedian
