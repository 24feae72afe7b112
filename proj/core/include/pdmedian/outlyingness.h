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

#ifndef PDMEDIAN_OUTLYINGNESS_H_
#define PDMEDIAN_OUTLYINGNESS_H_

#include "Eigen/Core"
#include "absl/status/statusor.h"
#include "pdmedian/directions.h"
#include "pdmedian/univariate.h"

namespace pdmedian {

// Per-direction location and scale of the projected data, mu_u and sigma_u,
// with the aggregates the test step needs.
struct ProjectedStats {
  Eigen::VectorXd location;  // mu_u, one entry per direction
  Eigen::VectorXd scale;     // sigma_u, one entry per direction
  double min_scale = 0.0;
  double max_scale = 0.0;
  // sup_u mu_u - inf_u mu_u.
  double location_spread = 0.0;
  // Least-squares fit c of mu_u ~ c.u, and max_u |mu_u - c.u|. Every level
  // set of the outlyingness lies between balls centered at c whose radii
  // differ from sigma * t by at most location_radius. Both follow the data
  // under translation, unlike location_spread.
  Eigen::VectorXd center;
  double location_radius = 0.0;
  // True when some sigma_u is zero; the outlyingness is then undefined.
  bool degenerate = false;

  int size() const { return static_cast<int>(location.size()); }
};

absl::StatusOr<ProjectedStats> ComputeProjectedStats(
    const SortedProjections& proj, const EstimatorPair& est);
absl::StatusOr<ProjectedStats> ComputeProjectedStats(const Dataset& data,
                                                     const DirectionSet& dirs,
                                                     const EstimatorPair& est);

// The discretized projected outlyingness
//
//   O(x) = max_{u in U_N} |<x, u> - mu_u| / sigma_u,
//
// bound to one set of ProjectedStats and directions. Each query costs
// O(N d).
class Outlyingness {
 public:
  // Fails with FailedPrecondition on degenerate stats.
  static absl::StatusOr<Outlyingness> Create(const ProjectedStats& stats,
                                             const DirectionSet& dirs);

  struct Value {
    double value = 0.0;
    // Index of the maximizing direction; ties go to the lowest index.
    int direction = 0;
    // <x, u> - mu_u along the maximizing direction.
    double signed_residual = 0.0;
  };

  Value Evaluate(const Eigen::VectorXd& x) const;
  double operator()(const Eigen::VectorXd& x) const {
    return Evaluate(x).value;
  }

  // Envelope-theorem gradient u_x * sign(<x, u_x> - mu_{u_x}) / sigma_{u_x},
  // with sign(0) taken as +1.
  Eigen::VectorXd Gradient(const Eigen::VectorXd& x) const;
  Eigen::VectorXd GradientAt(const Value& v) const;

  // Membership in the lower level set {O <= tau}; the boundary is included.
  bool LevelSetContains(const Eigen::VectorXd& x, double tau) const {
    return Evaluate(x).value <= tau;
  }

  int dim() const { return static_cast<int>(directions_.rows()); }
  const ProjectedStats& stats() const { return stats_; }
  const Eigen::MatrixXd& directions() const { return directions_; }

 private:
  Outlyingness(ProjectedStats stats, Eigen::MatrixXd directions);

  ProjectedStats stats_;
  Eigen::MatrixXd directions_;  // d x N
};

}  // namespace pdmedian

#endif  // PDMEDIAN_OUTLYINGNESS_H_
