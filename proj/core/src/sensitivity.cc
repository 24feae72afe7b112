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

#include "pdmedian/sensitivity.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace pdmedian {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

absl::Status CheckK(int n, int k, const EstimatorPair& est) {
  const int cap = MaxContamination(n, est);
  if (k < 1 || k > cap) {
    return absl::OutOfRangeError(absl::StrCat(
        "k = ", k, " outside [1, ", cap, "] for n = ", n, " and ", est.name()));
  }
  return absl::OkStatus();
}

}  // namespace

int MaxContamination(int n, const EstimatorPair& est) {
  int cap = (n - 1) / 2;
  if (est.uses_trimming()) {
    cap = std::min(cap, sorted::TrimCount(n, est.alpha));
  }
  return cap;
}

namespace sorted {

double MedianSensitivity(std::span<const double> s, int k) {
  const int m = MedianIndex(static_cast<int>(s.size()));
  const double center = OrderStatistic(s, m);
  return std::max(OrderStatistic(s, m + k) - center,
                  center - OrderStatistic(s, m - k));
}

ScaleBound MadSensitivity(std::span<const double> s, int k) {
  const int m = MedianIndex(static_cast<int>(s.size()));
  const double mad = KthSmallestDistance(s, OrderStatistic(s, m), m);

  double upper = -kInf;
  double lower = kInf;
  double prev_z = 0.0, prev_hi = 0.0, prev_lo = 0.0;
  for (int i = m - k; i <= m + k; ++i) {
    const double z = OrderStatistic(s, i);
    const double hi = KthSmallestDistance(s, z, m + k);
    const double lo = KthSmallestDistance(s, z, m - k);
    upper = std::max(upper, hi);
    lower = std::min(lower, lo);
    if (i > m - k) {
      const double width = z - prev_z;
      upper = std::max(upper, 0.5 * (prev_hi + hi + width));
      lower = std::min(lower, 0.5 * (prev_lo + lo - width));
    }
    prev_z = z;
    prev_hi = hi;
    prev_lo = lo;
  }
  ScaleBound out;
  out.sensitivity = std::max({upper - mad, mad - lower, 0.0});
  out.lower_bound = std::max(lower, 0.0);
  return out;
}

TrimmedBound TrimmedSensitivity(std::span<const double> s, int k,
                                double alpha) {
  const int n = static_cast<int>(s.size());
  const int g = TrimCount(n, alpha);
  const double retained = static_cast<double>(n - 2 * g);
  // Shifting every retained order statistic up (down) by k ranks telescopes
  // to k gaps spanning the retained range.
  double up = 0.0, down = 0.0;
  for (int i = 1; i <= k; ++i) {
    up += OrderStatistic(s, n - g + i) - OrderStatistic(s, g + i);
    down += OrderStatistic(s, n - g + 1 - i) - OrderStatistic(s, g + 1 - i);
  }
  TrimmedBound out;
  out.location = std::max(up, down) / retained;
  // |TAD' - TAD| <= mean_j |X'_(j) - X_(j)| + |TM' - TM|.
  out.scale = (up + down) / retained + out.location;
  out.scale_lower_bound =
      std::max(TrimmedAbsDeviation(s, alpha) - out.scale, 0.0);
  return out;
}

}  // namespace sorted

absl::StatusOr<double> MedianSensitivity(const SortedProjections& proj,
                                         int k) {
  if (auto st = CheckK(proj.n(), k, EstimatorPair::MedianMad()); !st.ok()) {
    return st;
  }
  double sup = 0.0;
  for (int j = 0; j < proj.num_directions(); ++j) {
    sup = std::max(sup, sorted::MedianSensitivity(proj.column(j), k));
  }
  return sup;
}

absl::StatusOr<ScaleBound> MadSensitivity(const SortedProjections& proj,
                                          int k) {
  if (auto st = CheckK(proj.n(), k, EstimatorPair::MedianMad()); !st.ok()) {
    return st;
  }
  ScaleBound out{0.0, kInf};
  for (int j = 0; j < proj.num_directions(); ++j) {
    const ScaleBound b = sorted::MadSensitivity(proj.column(j), k);
    out.sensitivity = std::max(out.sensitivity, b.sensitivity);
    out.lower_bound = std::min(out.lower_bound, b.lower_bound);
  }
  return out;
}

absl::StatusOr<TrimmedBound> TrimmedSensitivity(const SortedProjections& proj,
                                                int k, double alpha) {
  const EstimatorPair est = EstimatorPair::Trimmed(alpha);
  if (auto st = est.Validate(); !st.ok()) return st;
  if (auto st = CheckK(proj.n(), k, est); !st.ok()) return st;
  TrimmedBound out{0.0, 0.0, kInf};
  for (int j = 0; j < proj.num_directions(); ++j) {
    const TrimmedBound b = sorted::TrimmedSensitivity(proj.column(j), k, alpha);
    out.location = std::max(out.location, b.location);
    out.scale = std::max(out.scale, b.scale);
    out.scale_lower_bound = std::min(out.scale_lower_bound, b.scale_lower_bound);
  }
  return out;
}

double DeltaHat(double s_mu, double s_sigma, double b_hat, double tau,
                double eta) {
  if (!(b_hat > 0.0)) return kInf;
  return ((tau + eta) * s_sigma + s_mu) / b_hat;
}

absl::StatusOr<SensitivityReport> ComputeSensitivity(
    const SortedProjections& proj, const EstimatorPair& est, int k, double tau,
    double eta) {
  SensitivityReport report;
  report.k = k;
  if (est.location == LocationKind::kMedian && est.scale == ScaleKind::kMad) {
    auto s_mu = MedianSensitivity(proj, k);
    if (!s_mu.ok()) return s_mu.status();
    auto s_sigma = MadSensitivity(proj, k);
    if (!s_sigma.ok()) return s_sigma.status();
    report.location_sensitivity = *s_mu;
    report.scale_sensitivity = s_sigma->sensitivity;
    report.scale_lower_bound = s_sigma->lower_bound;
  } else if (est.location == LocationKind::kTrimmedMean &&
             est.scale == ScaleKind::kTrimmedAbsDeviation) {
    auto b = TrimmedSensitivity(proj, k, est.alpha);
    if (!b.ok()) return b.status();
    report.location_sensitivity = b->location;
    report.scale_sensitivity = b->scale;
    report.scale_lower_bound = b->scale_lower_bound;
  } else {
    return absl::UnimplementedError(absl::StrCat(
        "no computable sensitivity bound for estimator pair ", est.name()));
  }
  report.delta_hat =
      DeltaHat(report.location_sensitivity, report.scale_sensitivity,
               report.scale_lower_bound, tau, eta);
  return report;
}

}  // namespace pdmedian
