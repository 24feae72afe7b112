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

#include "pdmedian/sampler.h"

#include <cmath>
#include <random>

#include "absl/strings/str_cat.h"

namespace pdmedian {

absl::Status SamplerConfig::Validate() const {
  if (steps < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("sampler needs at least one step, got ", steps));
  }
  if (step_size.has_value() && !(*step_size > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("step size must be > 0, got ", *step_size));
  }
  if (!step_size.has_value() && !(step_scale > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("step scale must be > 0, got ", step_scale));
  }
  return absl::OkStatus();
}

double ResolveStepSize(const SamplerConfig& config,
                       const ProjectedStats& stats,
                       const PrivacyParams& params) {
  if (config.step_size.has_value()) return *config.step_size;
  const double slope = params.epsilon / (4.0 * params.eta * stats.min_scale);
  return config.step_scale / (slope * slope);
}

Eigen::VectorXd LangevinUpdate(const Outlyingness& outlyingness,
                               const PrivacyParams& params, double step,
                               const Eigen::VectorXd& y,
                               const Eigen::VectorXd& noise) {
  Eigen::VectorXd next = y + std::sqrt(2.0 * step) * noise;
  const Outlyingness::Value v = outlyingness.Evaluate(y);
  if (v.value <= params.tau) {
    next -= (step * params.epsilon / (4.0 * params.eta)) *
            outlyingness.GradientAt(v);
  }
  return next;
}

absl::StatusOr<SampleResult> LangevinSample(const Outlyingness& outlyingness,
                                            const PrivacyParams& params,
                                            const SamplerConfig& config,
                                            Rng& rng) {
  if (auto st = params.Validate(); !st.ok()) return st;
  if (auto st = config.Validate(); !st.ok()) return st;
  const int d = outlyingness.dim();
  std::normal_distribution<double> gauss(0.0, 1.0);

  Eigen::VectorXd y(d);
  switch (config.init) {
    case SamplerInit::kStandardGaussian:
      for (int i = 0; i < d; ++i) y[i] = gauss(rng);
      break;
    case SamplerInit::kAtPoint:
      if (config.init_point.size() != d) {
        return absl::InvalidArgumentError(
            absl::StrCat("initial point has length ", config.init_point.size(),
                         ", expected ", d));
      }
      y = config.init_point;
      break;
    case SamplerInit::kNonPrivateMedian:
      return absl::FailedPreconditionError(
          "kNonPrivateMedian must be resolved to a point before sampling");
  }

  SampleResult result;
  result.step_size = ResolveStepSize(config, outlyingness.stats(), params);
  Eigen::VectorXd noise(d);
  for (int t = 0; t < config.steps; ++t) {
    for (int i = 0; i < d; ++i) noise[i] = gauss(rng);
    y = LangevinUpdate(outlyingness, params, result.step_size, y, noise);
  }
  result.inside_level_set = outlyingness.LevelSetContains(y, params.tau);
  result.point = std::move(y);
  return result;
}

}  // namespace pdmedian
