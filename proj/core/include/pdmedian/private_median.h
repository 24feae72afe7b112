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

#ifndef PDMEDIAN_PRIVATE_MEDIAN_H_
#define PDMEDIAN_PRIVATE_MEDIAN_H_

#include <chrono>
#include <cstdint>
#include <optional>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pdmedian/directions.h"
#include "pdmedian/outlyingness.h"
#include "pdmedian/ptr.h"
#include "pdmedian/sampler.h"
#include "pdmedian/univariate.h"

namespace pdmedian {

struct DirectionConfig {
  // Number of directions; 0 selects DefaultDirectionCount(d).
  int n_dirs = 0;

  int Resolve(int dim) const {
    return n_dirs > 0 ? n_dirs : DefaultDirectionCount(dim);
  }
};

// Normalized subgradient descent on the (convex, piecewise linear)
// outlyingness. Step t has length initial_step_scale * min_u sigma_u *
// decay^t; the best iterate seen is returned.
struct DescentConfig {
  int max_iterations = 4000;
  double initial_step_scale = 1.0;
  double decay = 0.99;

  absl::Status Validate() const;
};

struct PrivateMedianOptions {
  DescentConfig descent;
  SafetyMarginOptions margin;
};

// Coordinate-wise lower median; the descent starting point.
Eigen::VectorXd CoordinatewiseMedian(const Dataset& data);

absl::StatusOr<Eigen::VectorXd> MinimizeOutlyingness(
    const Outlyingness& outlyingness, const Eigen::VectorXd& start,
    const DescentConfig& config);

// The direction set used for a given seed. PrivatePdMedian and
// NonPrivatePdMedian called with the same seed share it.
absl::StatusOr<DirectionSet> DirectionsForSeed(int dim,
                                               const DirectionConfig& config,
                                               uint64_t seed);

// Non-private PD median: approximate argmin of the outlyingness.
absl::StatusOr<Eigen::VectorXd> NonPrivatePdMedian(
    const Dataset& data, const EstimatorPair& est,
    const DirectionConfig& dirs_config, const DescentConfig& descent_config,
    uint64_t seed);

struct MedianResult {
  // Set iff the test passed; nullopt is the abstention.
  std::optional<Eigen::VectorXd> point;
  TestOutcome test;
  SafetyMarginResult margin;
  // Whether the released point lies in {O <= tau}. False on abstention.
  bool inside_level_set = false;
  // Some projected scale was zero; the test is recorded as failed.
  bool degenerate = false;
  std::chrono::nanoseconds wall_time{0};
  uint64_t seed = 0;
  uint64_t params_hash = 0;

  bool released() const { return point.has_value(); }
};

// Propose-test-release PD median: compute the projected statistics, bound
// the safety margin, run the noisy threshold test, and on a pass release a
// Langevin sample from the exponential mechanism on the outlyingness. One
// direction set is shared by the test and the release. Deterministic given
// `seed`.
absl::StatusOr<MedianResult> PrivatePdMedian(
    const Dataset& data, const EstimatorPair& est, const PrivacyParams& params,
    const DirectionConfig& dirs_config, const SamplerConfig& sampler_config,
    uint64_t seed, const PrivateMedianOptions& options = {});

// Hash of the parameters that shape a release, for experiment bookkeeping.
uint64_t HashParams(const EstimatorPair& est, const PrivacyParams& params,
                    const DirectionConfig& dirs_config,
                    const SamplerConfig& sampler_config);

}  // namespace pdmedian

#endif  // PDMEDIAN_PRIVATE_MEDIAN_H_
