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

#include "pdmedian/univariate.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "absl/strings/str_cat.h"

namespace pdmedian {
namespace {

absl::StatusOr<std::vector<double>> SortedCopy(std::span<const double> sample,
                                               size_t min_size) {
  if (sample.size() < min_size) {
    return absl::InvalidArgumentError(absl::StrCat(
        "sample needs at least ", min_size, " points, got ", sample.size()));
  }
  std::vector<double> s(sample.begin(), sample.end());
  if (std::any_of(s.begin(), s.end(), [](double v) { return std::isnan(v); })) {
    return absl::InvalidArgumentError("sample contains NaN");
  }
  std::stable_sort(s.begin(), s.end());
  return s;
}

absl::Status CheckAlpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5)) {
    return absl::InvalidArgumentError(
        absl::StrCat("trimming proportion must lie in (0, 1/2), got ", alpha));
  }
  return absl::OkStatus();
}

}  // namespace

absl::Status EstimatorPair::Validate() const {
  if (uses_trimming()) return CheckAlpha(alpha);
  return absl::OkStatus();
}

std::string EstimatorPair::name() const {
  std::string loc = location == LocationKind::kMedian ? "med" : "tm";
  switch (scale) {
    case ScaleKind::kMad:
      return loc + "_mad";
    case ScaleKind::kTrimmedAbsDeviation:
      return loc + "_tad";
    case ScaleKind::kIqr:
      return loc + "_iqr";
  }
  return loc;
}

absl::StatusOr<double> Median(std::span<const double> sample) {
  auto s = SortedCopy(sample, 1);
  if (!s.ok()) return s.status();
  return sorted::Median(*s);
}

absl::StatusOr<double> Mad(std::span<const double> sample) {
  auto s = SortedCopy(sample, 1);
  if (!s.ok()) return s.status();
  return sorted::Mad(*s);
}

absl::StatusOr<double> TrimmedMean(std::span<const double> sample,
                                   double alpha) {
  if (auto st = CheckAlpha(alpha); !st.ok()) return st;
  auto s = SortedCopy(sample, 1);
  if (!s.ok()) return s.status();
  return sorted::TrimmedMean(*s, alpha);
}

absl::StatusOr<double> TrimmedAbsDeviation(std::span<const double> sample,
                                           double alpha) {
  if (auto st = CheckAlpha(alpha); !st.ok()) return st;
  auto s = SortedCopy(sample, 1);
  if (!s.ok()) return s.status();
  return sorted::TrimmedAbsDeviation(*s, alpha);
}

absl::StatusOr<double> Iqr(std::span<const double> sample) {
  auto s = SortedCopy(sample, 2);
  if (!s.ok()) return s.status();
  return sorted::Iqr(*s);
}

namespace sorted {

int TrimCount(int n, double alpha) {
  return static_cast<int>(std::floor(static_cast<double>(n) * alpha));
}

double Median(std::span<const double> s) {
  const int n = static_cast<int>(s.size());
  return OrderStatistic(s, MedianIndex(n));
}

double Mad(std::span<const double> s) {
  const int n = static_cast<int>(s.size());
  return KthSmallestDistance(s, Median(s), MedianIndex(n));
}

double TrimmedMean(std::span<const double> s, double alpha) {
  const int n = static_cast<int>(s.size());
  const int g = TrimCount(n, alpha);
  double sum = 0.0;
  for (int i = g + 1; i <= n - g; ++i) sum += OrderStatistic(s, i);
  return sum / static_cast<double>(n - 2 * g);
}

double TrimmedAbsDeviation(std::span<const double> s, double alpha) {
  const int n = static_cast<int>(s.size());
  const int g = TrimCount(n, alpha);
  const double center = TrimmedMean(s, alpha);
  double sum = 0.0;
  for (int i = g + 1; i <= n - g; ++i) {
    sum += std::abs(OrderStatistic(s, i) - center);
  }
  return sum / static_cast<double>(n - 2 * g);
}

double Iqr(std::span<const double> s) {
  const int n = static_cast<int>(s.size());
  // ceil(n q) for q = 1/4 and 3/4, in integer arithmetic.
  const int lower = (n + 3) / 4;
  const int upper = (3 * n + 3) / 4;
  return OrderStatistic(s, upper) - OrderStatistic(s, lower);
}

double KthSmallestDistance(std::span<const double> s, double z, int j) {
  // Distances split into two ascending runs: points left of z read
  // right-to-left, and points at or right of z read left-to-right. The j-th
  // smallest of their union takes t from the left run and j - t from the
  // right run; binary search for the smallest consistent t.
  const int n = static_cast<int>(s.size());
  const int p = static_cast<int>(std::lower_bound(s.begin(), s.end(), z) -
                                 s.begin());
  const int right_len = n - p;
  auto left = [&](int i) { return z - s[static_cast<size_t>(p - 1 - i)]; };
  auto right = [&](int i) { return s[static_cast<size_t>(p + i)] - z; };

  int lo = std::max(0, j - right_len);
  int hi = std::min(j, p);
  while (lo < hi) {
    const int t = lo + (hi - lo) / 2;
    // t is large enough once the next left distance is no smaller than the
    // last right distance taken.
    if (left(t) >= right(j - t - 1)) {
      hi = t;
    } else {
      lo = t + 1;
    }
  }
  const int t = lo;
  double result = -std::numeric_limits<double>::infinity();
  if (t > 0) result = std::max(result, left(t - 1));
  if (j - t > 0) result = std::max(result, right(j - t - 1));
  return result;
}

LocationScale Evaluate(std::span<const double> s, const EstimatorPair& est) {
  LocationScale out;
  out.location = est.location == LocationKind::kMedian
                     ? Median(s)
                     : TrimmedMean(s, est.alpha);
  switch (est.scale) {
    case ScaleKind::kMad:
      out.scale = Mad(s);
      break;
    case ScaleKind::kTrimmedAbsDeviation:
      out.scale = TrimmedAbsDeviation(s, est.alpha);
      break;
    case ScaleKind::kIqr:
      out.scale = Iqr(s);
      break;
  }
  return out;
}

}  // namespace sorted
}  // namespace pdmedian
