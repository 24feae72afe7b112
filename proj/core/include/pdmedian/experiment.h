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

#ifndef PDMEDIAN_EXPERIMENT_H_
#define PDMEDIAN_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pdmedian/datagen.h"
#include "pdmedian/private_median.h"
#include "pdmedian/ptr.h"
#include "pdmedian/sampler.h"
#include "pdmedian/univariate.h"

namespace pdmedian {

enum class Distribution { kGaussian, kContaminated, kCauchy };
std::string_view DistributionName(Distribution dist);
absl::StatusOr<Distribution> ParseDistribution(std::string_view name);

enum class Method { kPrivatePd, kNonPrivatePd, kSampleMean };

enum class EtaRule {
  kFixed,      // ExperimentConfig::eta
  kLog,        // c log(n) / n
  kHeavyTail,  // c max(d^{3/2}, d^{1/2} log n) / n
  kAuto,       // kHeavyTail for Cauchy data, kLog otherwise
};
absl::StatusOr<EtaRule> ParseEtaRule(std::string_view name);

struct ExperimentConfig {
  int n = 2000;
  std::vector<int> dims = {2, 5, 10};
  int reps = 50;
  std::vector<Distribution> distributions = {Distribution::kGaussian,
                                             Distribution::kContaminated};
  std::vector<Method> methods = {Method::kPrivatePd, Method::kNonPrivatePd,
                                 Method::kSampleMean};
  double contamination_fraction = 0.25;
  // Contaminated rows have mean contamination_shift * (1, ..., 1).
  double contamination_shift = 5.0;
  EstimatorPair estimator = EstimatorPair::MedianMad();

  double epsilon = 10.0;
  // Defaults to 10 / n.
  std::optional<double> delta;
  EtaRule eta_rule = EtaRule::kAuto;
  double eta_constant = 30.0;
  double eta = 0.0;
  double tau = 1.0;

  DirectionConfig directions;
  SamplerConfig sampler;
  DescentConfig descent;

  uint64_t seed = 1;
  // Wall times make the CSV machine-dependent, so they are recorded only on
  // request; otherwise wall_ms is written as 0.
  bool record_wall_time = false;
  // Worker threads; 0 uses the hardware concurrency.
  int threads = 0;

  absl::Status Validate() const;
  PrivacyParams ResolveParams(Distribution dist, int dim) const;
};

// One (estimator, distribution, d, rep) outcome.
struct ResultRow {
  std::string estimator;
  std::string distribution;
  int d = 0;
  int rep = 0;
  bool released = false;
  // ||estimate - truth||^2; present iff released.
  std::optional<double> sq_error;
  double wall_ms = 0.0;
  uint64_t seed = 0;

  bool operator==(const ResultRow&) const = default;
};

struct CellSummary {
  std::string estimator;
  std::string distribution;
  int d = 0;
  int reps = 0;
  int released = 0;
  // sqrt(mean squared error over released reps); unset when none released.
  std::optional<double> ermse;
  double abstain_rate = 0.0;
};

struct ExperimentResult {
  // Sorted by (estimator, distribution, d, rep).
  std::vector<ResultRow> rows;
  std::vector<CellSummary> summary;
  // Not OK when some replication failed; `rows` then holds every row that
  // did complete.
  absl::Status status;
};

std::string EstimatorName(Method method, const EstimatorPair& est);

Eigen::VectorXd SampleMean(const Dataset& data);

// Groups rows into (estimator, distribution, d) cells. Abstentions count
// towards the abstain rate only.
std::vector<CellSummary> Summarize(std::span<const ResultRow> rows);

// Runs every (distribution, d, rep) job with fresh data, applying each
// method. Per-rep seeds are derived from the master seed by counter, so any
// cell can be reproduced on its own.
absl::StatusOr<ExperimentResult> RunExperiment(const ExperimentConfig& config);

}  // namespace pdmedian

#endif  // PDMEDIAN_EXPERIMENT_H_
