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

#include "pdmedian/outlyingness.h"

#include <algorithm>
#include <cmath>

#include "Eigen/QR"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace pdmedian {

absl::StatusOr<ProjectedStats> ComputeProjectedStats(
    const SortedProjections& proj, const EstimatorPair& est) {
  if (auto st = est.Validate(); !st.ok()) return st;
  if (proj.n() < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("need at least 2 observations, got ", proj.n()));
  }
  const int num = proj.num_directions();
  ProjectedStats stats;
  stats.location.resize(num);
  stats.scale.resize(num);
  for (int j = 0; j < num; ++j) {
    const sorted::LocationScale ls = sorted::Evaluate(proj.column(j), est);
    stats.location[j] = ls.location;
    stats.scale[j] = ls.scale;
  }
  stats.min_scale = stats.scale.minCoeff();
  stats.max_scale = stats.scale.maxCoeff();
  stats.location_spread =
      stats.location.maxCoeff() - stats.location.minCoeff();
  const Eigen::MatrixXd& dirs = proj.directions();
  stats.center = dirs.transpose().colPivHouseholderQr().solve(stats.location);
  stats.location_radius =
      (stats.location - dirs.transpose() * stats.center).cwiseAbs().maxCoeff();
  stats.degenerate = !(stats.min_scale > 0.0);
  return stats;
}

absl::StatusOr<ProjectedStats> ComputeProjectedStats(const Dataset& data,
                                                     const DirectionSet& dirs,
                                                     const EstimatorPair& est) {
  auto proj = SortedProjections::Compute(data, dirs);
  if (!proj.ok()) return proj.status();
  return ComputeProjectedStats(*proj, est);
}

absl::StatusOr<Outlyingness> Outlyingness::Create(const ProjectedStats& stats,
                                                  const DirectionSet& dirs) {
  if (stats.size() != dirs.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("stats cover ", stats.size(), " directions, set has ",
                     dirs.size()));
  }
  if (stats.degenerate) {
    return absl::FailedPreconditionError(
        "projected scale is zero along some direction; outlyingness is "
        "undefined");
  }
  return Outlyingness(stats, dirs.matrix());
}

Outlyingness::Outlyingness(ProjectedStats stats, Eigen::MatrixXd directions)
    : stats_(std::move(stats)), directions_(std::move(directions)) {}

Outlyingness::Value Outlyingness::Evaluate(const Eigen::VectorXd& x) const {
  const Eigen::VectorXd proj = directions_.transpose() * x;
  Value best;
  best.value = -1.0;
  for (Eigen::Index j = 0; j < proj.size(); ++j) {
    const double r = proj[j] - stats_.location[j];
    const double v = std::abs(r) / stats_.scale[j];
    if (v > best.value) {
      best.value = v;
      best.direction = static_cast<int>(j);
      best.signed_residual = r;
    }
  }
  return best;
}

Eigen::VectorXd Outlyingness::GradientAt(const Value& v) const {
  const double sign = v.signed_residual < 0.0 ? -1.0 : 1.0;
  return directions_.col(v.direction) * (sign / stats_.scale[v.direction]);
}

Eigen::VectorXd Outlyingness::Gradient(const Eigen::VectorXd& x) const {
  return GradientAt(Evaluate(x));
}

}  // namespace pdmedian
