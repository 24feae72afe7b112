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
#include <limits>

#include "absl/strings/str_cat.h"

namespace pdmedian {

absl::Status PrivacyParams::Validate() const {
  if (!(epsilon > 0.0)) {
    return absl::InvalidArgumentError(absl::StrCat("epsilon must be > 0, got ",
                                                   epsilon));
  }
  if (!(delta > 0.0 && delta <= 0.5)) {
    return absl::InvalidArgumentError(
        absl::StrCat("delta must lie in (0, 1/2], got ", delta));
  }
  if (!(eta > 0.0)) {
    return absl::InvalidArgumentError(absl::StrCat("eta must be > 0, got ",
                                                   eta));
  }
  if (!(tau > 0.0)) {
    return absl::InvalidArgumentError(absl::StrCat("tau must be > 0, got ",
                                                   tau));
  }
  return absl::OkStatus();
}

double LogEtaRule(int n, double constant) {
  return constant * std::log(static_cast<double>(n)) / n;
}

double HeavyTailEtaRule(int n, int dim, double constant) {
  const double d = dim;
  return constant *
         std::max(d * std::sqrt(d), std::sqrt(d) * std::log(double(n))) / n;
}

double LaplaceFromUniform(double u) {
  if (u == 0.0) return 0.0;
  const double sign = u > 0.0 ? 1.0 : -1.0;
  return -sign * std::log(1.0 - 2.0 * std::abs(u));
}

double SampleStandardLaplace(Rng& rng) {
  std::uniform_real_distribution<double> uniform(-0.5, 0.5);
  double u = uniform(rng);
  while (u == -0.5) u = uniform(rng);
  return LaplaceFromUniform(u);
}

double VolumeRatio(const ProjectedStats& stats, const PrivacyParams& params,
                   int dim) {
  if (!(stats.min_scale > 0.0)) return std::numeric_limits<double>::infinity();
  const double eps = params.epsilon;
  const double eta = params.eta;
  const double tau = params.tau;
  const double d = dim;
  const double spread = stats.location_radius;
  const double exponent =
      -eps * tau / (4.0 * eta) +
      eps * (0.5 + spread / (4.0 * stats.min_scale * eta)) + d;
  const double base = (stats.max_scale * (tau + 2.0 * eta) + spread) /
                      (stats.min_scale * 4.0 * eta * d * eps);
  return std::exp(exponent + d * std::log(base));
}

absl::StatusOr<SafetyMarginResult> SafetyMarginLowerBound(
    const SortedProjections& proj, const ProjectedStats& stats,
    const PrivacyParams& params, const EstimatorPair& est,
    const SafetyMarginOptions& options) {
  if (auto st = params.Validate(); !st.ok()) return st;
  if (auto st = est.Validate(); !st.ok()) return st;
  if (proj.n() < 5) {
    return absl::InvalidArgumentError(
        absl::StrCat("need at least 5 observations, got ", proj.n()));
  }
  SafetyMarginResult result;
  if (stats.degenerate) {
    result.volume_ratio = std::numeric_limits<double>::infinity();
    result.reason = StopReason::kDegenerate;
    return result;
  }
  // VR does not depend on k, so it is evaluated once.
  result.volume_ratio = VolumeRatio(stats, params, proj.dim());
  const bool volume_ok = result.volume_ratio < params.delta;
  const double threshold = options.deviation_threshold_scale * params.eta;
  const int cap = MaxContamination(proj.n(), est);

  for (int k = 2;; ++k) {
    if (k > cap) {
      // Every admissible k passed.
      result.safety_margin = std::max(cap - 1, 0);
      result.k_stop = k;
      result.reason = StopReason::kCap;
      break;
    }
    if (!volume_ok) {
      result.safety_margin = k - 2;
      result.k_stop = k;
      result.reason = StopReason::kVolume;
      break;
    }
    auto report =
        ComputeSensitivity(proj, est, k, params.tau, params.eta);
    if (!report.ok()) return report.status();
    result.last_report = *report;
    if (!(report->delta_hat < threshold)) {
      result.safety_margin = k - 2;
      result.k_stop = k;
      result.reason = StopReason::kDeviation;
      break;
    }
  }
  return result;
}

bool ThresholdTestPasses(int safety_margin, double noise,
                         const PrivacyParams& params) {
  const double scale = 2.0 / params.epsilon;
  return safety_margin + scale * noise >
         scale * std::log(1.0 / (2.0 * params.delta));
}

double PassProbability(int safety_margin, const PrivacyParams& params) {
  // P(W > t) for standard Laplace W.
  const double t = std::log(1.0 / (2.0 * params.delta)) -
                   0.5 * params.epsilon * safety_margin;
  return t >= 0.0 ? 0.5 * std::exp(-t) : 1.0 - 0.5 * std::exp(t);
}

TestOutcome RunThresholdTest(int safety_margin, const PrivacyParams& params,
                             Rng& rng) {
  TestOutcome out;
  out.safety_margin = safety_margin;
  out.noise = SampleStandardLaplace(rng);
  out.passed = ThresholdTestPasses(safety_margin, out.noise, params);
  return out;
}

}  // namespace pdmedian
