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

#ifndef PDMEDIAN_UNIVARIATE_H_
#define PDMEDIAN_UNIVARIATE_H_

#include <span>
#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace pdmedian {

// Robust univariate location and scale estimators, applied to the data
// projected onto one direction.
//
// Order statistics are 1-based: X_(1) <= ... <= X_(n). The median is the
// lower median X_(floor((n+1)/2)), never the midpoint of the two central
// values. Inputs containing NaN are rejected.

enum class LocationKind { kMedian, kTrimmedMean };
enum class ScaleKind { kMad, kTrimmedAbsDeviation, kIqr };

// The (mu, sigma) pair defining the outlyingness function.
struct EstimatorPair {
  LocationKind location = LocationKind::kMedian;
  ScaleKind scale = ScaleKind::kMad;
  // Trimming proportion, used only by the trimmed estimators. Must lie in
  // (0, 1/2) when one of them is selected.
  double alpha = 0.1;

  static EstimatorPair MedianMad() { return {}; }
  static EstimatorPair Trimmed(double alpha) {
    return {LocationKind::kTrimmedMean, ScaleKind::kTrimmedAbsDeviation,
            alpha};
  }

  bool uses_trimming() const {
    return location == LocationKind::kTrimmedMean ||
           scale == ScaleKind::kTrimmedAbsDeviation;
  }
  absl::Status Validate() const;
  // Short identifier such as "med_mad" or "tm_tad".
  std::string name() const;
};

absl::StatusOr<double> Median(std::span<const double> sample);
absl::StatusOr<double> Mad(std::span<const double> sample);
absl::StatusOr<double> TrimmedMean(std::span<const double> sample,
                                   double alpha);
// Mean of |X_(i) - trimmed mean| over the retained order statistics.
absl::StatusOr<double> TrimmedAbsDeviation(std::span<const double> sample,
                                           double alpha);
// F^-1(3/4) - F^-1(1/4) with F^-1(q) = inf{x : F(x) >= q}. Needs n >= 2.
absl::StatusOr<double> Iqr(std::span<const double> sample);

// Unchecked kernels on an ascending-sorted, NaN-free, non-empty sample.
// These are the hot-path versions used across directions.
namespace sorted {

// X_(i), 1-based.
inline double OrderStatistic(std::span<const double> s, int i) {
  return s[static_cast<size_t>(i - 1)];
}
inline int MedianIndex(int n) { return (n + 1) / 2; }
// floor(n * alpha): the number of points removed from each tail.
int TrimCount(int n, double alpha);

double Median(std::span<const double> s);
double Mad(std::span<const double> s);
double TrimmedMean(std::span<const double> s, double alpha);
double TrimmedAbsDeviation(std::span<const double> s, double alpha);
double Iqr(std::span<const double> s);

// The j-th smallest (1-based) of {|X_i - z|}, in O(log n).
double KthSmallestDistance(std::span<const double> s, double z, int j);

struct LocationScale {
  double location = 0.0;
  double scale = 0.0;
};
LocationScale Evaluate(std::span<const double> s, const EstimatorPair& est);

}  // namespace sorted
}  // namespace pdmedian

#endif  // PDMEDIAN_UNIVARIATE_H_
