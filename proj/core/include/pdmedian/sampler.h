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

#ifndef PDMEDIAN_SAMPLER_H_
#define PDMEDIAN_SAMPLER_H_

#include <optional>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pdmedian/outlyingness.h"
#include "pdmedian/ptr.h"
#include "pdmedian/rng.h"

namespace pdmedian {

enum class SamplerInit {
  // Y_0 ~ N(0, I).
  kStandardGaussian,
  // Y_0 = SamplerConfig::init_point.
  kAtPoint,
  // Y_0 = the non-private PD median on the same directions plus one
  // sqrt(2 omega) Gaussian step. Resolved by PrivatePdMedian;
  // LangevinSample itself rejects it.
  kNonPrivateMedian,
};

struct SamplerConfig {
  int steps = 2000;
  // Absolute step size omega. When unset the step is chosen relative to the
  // steepest drift: omega = step_scale / L^2 with
  // L = epsilon / (4 eta min_u sigma_u).
  std::optional<double> step_size;
  double step_scale = 0.02;
  SamplerInit init = SamplerInit::kNonPrivateMedian;
  Eigen::VectorXd init_point;

  absl::Status Validate() const;
};

double ResolveStepSize(const SamplerConfig& config,
                       const ProjectedStats& stats,
                       const PrivacyParams& params);

// One unadjusted Langevin step for the density proportional to
// exp(-O(y) epsilon / 4 eta) on {O <= tau}:
//
//   y' = y - omega (epsilon / 4 eta) grad O(y) + sqrt(2 omega) noise,
//
// where the gradient is taken as zero when O(y) > tau.
Eigen::VectorXd LangevinUpdate(const Outlyingness& outlyingness,
                               const PrivacyParams& params, double step,
                               const Eigen::VectorXd& y,
                               const Eigen::VectorXd& noise);

struct SampleResult {
  Eigen::VectorXd point;
  // Whether the final state lies in {O <= tau}. The chain's last state is
  // returned either way.
  bool inside_level_set = false;
  double step_size = 0.0;
};

// Runs `config.steps` Langevin updates and returns the final state.
absl::StatusOr<SampleResult> LangevinSample(const Outlyingness& outlyingness,
                                            const PrivacyParams& params,
                                            const SamplerConfig& config,
                                            Rng& rng);

}  // namespace pdmedian

#endif  // PDMEDIAN_SAMPLER_H_
