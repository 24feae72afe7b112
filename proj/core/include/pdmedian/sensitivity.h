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

#ifndef PDMEDIAN_SENSITIVITY_H_
#define PDMEDIAN_SENSITIVITY_H_

#include <span>

#include "absl/status/statusor.h"
#include "pdmedian/directions.h"
#include "pdmedian/univariate.h"

namespace pdmedian {

// Upper bounds on how far the projected location and scale estimators can
// move when k observations are replaced by arbitrary values, taken over the
// direction set, together with a lower bound on the contaminated scale.
//
// Every bound here is a worst case over all k-point replacements, derived
// from the fact that replacing k points moves each order statistic by at
// most k ranks: the modified X'_(j) lies in [X_(j-k), X_(j+k)].
struct SensitivityReport {
  int k = 0;
  double location_sensitivity = 0.0;  // S_{n,k}(mu)
  double scale_sensitivity = 0.0;     // S_{n,k}(sigma)
  double scale_lower_bound = 0.0;     // b: inf of sigma over contaminations
  double delta_hat = 0.0;             // ((tau+eta) S(sigma) + S(mu)) / b
};

struct ScaleBound {
  double sensitivity = 0.0;
  double lower_bound = 0.0;
};

struct TrimmedBound {
  double location = 0.0;
  double scale = 0.0;
  double scale_lower_bound = 0.0;
};

// Largest k for which every order-statistic index used by the bounds is
// valid: floor((n-1)/2), further capped at floor(n alpha) for trimmed
// estimators (beyond that a replaced point enters the retained range and the
// change is unbounded).
int MaxContamination(int n, const EstimatorPair& est);

// Bounds along a single direction, on an ascending-sorted sample.
namespace sorted {

// max(X_(m+k) - X_(m), X_(m) - X_(m-k)), m = floor((n+1)/2).
double MedianSensitivity(std::span<const double> s, int k);

// The contaminated median lies in the window [X_(m-k), X_(m+k)]; at any
// centre z in that window the contaminated MAD lies in
// [Y_(m-k)(z), Y_(m+k)(z)] where Y_i(z) = |X_i - z|. Each Y_(j)(z) is
// 1-Lipschitz and piecewise linear, so its extremes over the window are
// bounded by evaluating at the observations inside it and interpolating
// with slope 1 between neighbours.
ScaleBound MadSensitivity(std::span<const double> s, int k);

// Order-statistic bounds for the trimmed mean and trimmed absolute
// deviation. Requires k <= floor(n alpha).
TrimmedBound TrimmedSensitivity(std::span<const double> s, int k,
                                double alpha);

}  // namespace sorted

// Suprema over directions of the per-direction bounds; the scale lower bound
// is an infimum. Errors when k is outside [1, MaxContamination].
absl::StatusOr<double> MedianSensitivity(const SortedProjections& proj, int k);
absl::StatusOr<ScaleBound> MadSensitivity(const SortedProjections& proj,
                                          int k);
absl::StatusOr<TrimmedBound> TrimmedSensitivity(const SortedProjections& proj,
                                                int k, double alpha);

// ((tau + eta) s_sigma + s_mu) / b_hat, or +infinity when b_hat is 0.
double DeltaHat(double s_mu, double s_sigma, double b_hat, double tau,
                double eta);

// Full report for one k. Only the (median, MAD) and (trimmed mean, trimmed
// absolute deviation) pairs have computable bounds; other pairs return
// Unimplemented.
absl::StatusOr<SensitivityReport> ComputeSensitivity(
    const SortedProjections& proj, const EstimatorPair& est, int k, double tau,
    double eta);

}  // namespace pdmedian

#endif  // PDMEDIAN_SENSITIVITY_H_
