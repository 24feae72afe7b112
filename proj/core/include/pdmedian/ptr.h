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

#ifndef PDMEDIAN_PTR_H_
#define PDMEDIAN_PTR_H_

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <utility>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pdmedian/directions.h"
#include "pdmedian/outlyingness.h"
#include "pdmedian/rng.h"
#include "pdmedian/sensitivity.h"
#include "pdmedian/univariate.h"

namespace pdmedian {

// Privacy budget (epsilon, delta) plus the exponential-mechanism parameters:
// eta scales the cost (density proportional to exp(-O(x) epsilon / 4 eta))
// and tau truncates it to the level set {O <= tau}.
struct PrivacyParams {
  double epsilon = 10.0;
  double delta = 1e-3;
  double eta = 0.1;
  double tau = 1.0;

  absl::Status Validate() const;
};

// eta = c log(n) / n, the rule used for Gaussian-like data.
double LogEtaRule(int n, double constant = 30.0);
// eta = c max(d^{3/2}, d^{1/2} log n) / n, the heavier rule heavy-tailed
// (Cauchy) data needs.
double HeavyTailEtaRule(int n, int dim, double constant = 30.0);

// Standard Laplace(0, 1) by inverse CDF: W = -sign(U) log(1 - 2|U|) for
// U in (-1/2, 1/2).
double LaplaceFromUniform(double u);
double SampleStandardLaplace(Rng& rng);

// Volume-ratio condition value
//
//   VR = exp(-eps tau / 4 eta + eps (1/2 + a / (4 s_min eta)) + d)
//        * ((s_max (tau + 2 eta) + a) / (s_min 4 eta d eps))^d
//
// with a = ProjectedStats::location_radius. +infinity when s_min is not
// positive.
// Does not depend on k.
double VolumeRatio(const ProjectedStats& stats, const PrivacyParams& params,
                   int dim);

struct SafetyMarginOptions {
  // The loop keeps going while Delta_k < deviation_threshold_scale * eta.
  double deviation_threshold_scale = 1.0;
};

enum class StopReason { kVolume, kDeviation, kCap, kDegenerate };

struct SafetyMarginResult {
  int safety_margin = 0;
  // First k that failed, or the cap + 1 when none did.
  int k_stop = 2;
  double volume_ratio = 0.0;
  StopReason reason = StopReason::kDegenerate;
  // Report at the last evaluated k, when one was computed.
  std::optional<SensitivityReport> last_report;
};

// Lower bound on the safety margin: for k = 2, 3, ... keep going while both
// VR < delta and Delta_k < eta hold; the first failing k yields k - 2.
absl::StatusOr<SafetyMarginResult> SafetyMarginLowerBound(
    const SortedProjections& proj, const ProjectedStats& stats,
    const PrivacyParams& params, const EstimatorPair& est,
    const SafetyMarginOptions& options = {});

struct TestOutcome {
  int safety_margin = 0;
  double noise = 0.0;  // the Laplace draw W
  bool passed = false;
  int k_stop = 0;
  double volume_ratio = 0.0;
};

// Z = 1{ sm + (2/eps) W > (2/eps) log(1 / (2 delta)) }.
bool ThresholdTestPasses(int safety_margin, double noise,
                         const PrivacyParams& params);
// P(Z = 1) for a given margin, over the Laplace noise.
double PassProbability(int safety_margin, const PrivacyParams& params);
// Draws W and evaluates Z.
TestOutcome RunThresholdTest(int safety_margin, const PrivacyParams& params,
                             Rng& rng);

// Propose-test-release built from any test mechanism (a pass probability
// lambda(data)) and any release mechanism. Returns nullopt (abstain) with
// probability 1 - lambda. An abstention still spends the privacy budget.
template <typename Data, typename Point>
class PtrMechanism {
 public:
  using PassProbabilityFn = std::function<double(const Data&)>;
  using ReleaseFn = std::function<Point(const Data&, Rng&)>;

  PtrMechanism(PassProbabilityFn pass_probability, ReleaseFn release)
      : pass_probability_(std::move(pass_probability)),
        release_(std::move(release)) {}

  std::optional<Point> operator()(const Data& data, Rng& rng) const {
    const double lambda = std::clamp(pass_probability_(data), 0.0, 1.0);
    std::bernoulli_distribution test(lambda);
    if (!test(rng)) return std::nullopt;
    return release_(data, rng);
  }

 private:
  PassProbabilityFn pass_probability_;
  ReleaseFn release_;
};

}  // namespace pdmedian

#endif  // PDMEDIAN_PTR_H_
