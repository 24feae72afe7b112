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

#ifndef PDMEDIAN_DIRECTIONS_H_
#define PDMEDIAN_DIRECTIONS_H_

#include <cstdint>
#include <span>

#include "Eigen/Core"
#include "absl/status/statusor.h"

namespace pdmedian {

// An n x d matrix; each row is one observation.
using Dataset = Eigen::MatrixXd;

// A finite set of unit vectors discretizing the sphere S^{d-1}. The
// supremum over directions in the outlyingness function is taken over this
// set. Immutable once built.
class DirectionSet {
 public:
  // Draws `n_dirs` directions uniformly on S^{dim-1} by normalizing standard
  // Gaussian vectors. Deterministic given `seed`.
  static absl::StatusOr<DirectionSet> Sample(int n_dirs, int dim,
                                             uint64_t seed);

  // Wraps caller-supplied directions, one per column. Every column must have
  // unit norm (within 1e-12).
  static absl::StatusOr<DirectionSet> FromColumns(Eigen::MatrixXd columns,
                                                  uint64_t seed = 0);

  int size() const { return static_cast<int>(vectors_.cols()); }
  int dim() const { return static_cast<int>(vectors_.rows()); }
  uint64_t seed() const { return seed_; }

  // d x N matrix of directions.
  const Eigen::MatrixXd& matrix() const { return vectors_; }
  Eigen::MatrixXd::ConstColXpr direction(int j) const {
    return vectors_.col(j);
  }

 private:
  DirectionSet(Eigen::MatrixXd vectors, uint64_t seed)
      : vectors_(std::move(vectors)), seed_(seed) {}

  Eigen::MatrixXd vectors_;
  uint64_t seed_ = 0;
};

// Number of directions used in the simulations: 500 below dimension 20 and
// 1000 from there on.
int DefaultDirectionCount(int dim);

// Entry i is <row i of data, u>.
absl::StatusOr<Eigen::VectorXd> Project(const Dataset& data,
                                        const Eigen::VectorXd& u);

// The data projected onto every direction of a DirectionSet, with each
// column sorted ascending. Column j holds the order statistics of X^T u_j.
// Estimators, sensitivity bounds and the test all read from this one table.
class SortedProjections {
 public:
  static absl::StatusOr<SortedProjections> Compute(const Dataset& data,
                                                   const DirectionSet& dirs);

  int n() const { return static_cast<int>(values_.rows()); }
  int num_directions() const { return static_cast<int>(values_.cols()); }
  // Dimension of the data the projections came from.
  int dim() const { return static_cast<int>(directions_.rows()); }
  // The d x N direction matrix the projections were taken along.
  const Eigen::MatrixXd& directions() const { return directions_; }

  // Sorted projections onto direction j.
  std::span<const double> column(int j) const {
    return {values_.data() + static_cast<std::ptrdiff_t>(j) * values_.rows(),
            static_cast<size_t>(values_.rows())};
  }

 private:
  SortedProjections(Eigen::MatrixXd values, Eigen::MatrixXd directions)
      : values_(std::move(values)), directions_(std::move(directions)) {}

  Eigen::MatrixXd values_;  // n x N, column-major
  Eigen::MatrixXd directions_;
};

}  // namespace pdmedian

#endif  // PDMEDIAN_DIRECTIONS_H_
