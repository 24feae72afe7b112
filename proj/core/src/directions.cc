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

#include "pdmedian/directions.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "pdmedian/rng.h"

namespace pdmedian {

absl::StatusOr<DirectionSet> DirectionSet::Sample(int n_dirs, int dim,
                                                  uint64_t seed) {
  if (n_dirs < 1 || dim < 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "need n_dirs >= 1 and dim >= 1, got ", n_dirs, " and ", dim));
  }
  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd vectors(dim, n_dirs);
  for (int j = 0; j < n_dirs; ++j) {
    double norm = 0.0;
    // A zero draw has probability zero, but redraw rather than divide by 0.
    while (norm == 0.0) {
      for (int i = 0; i < dim; ++i) vectors(i, j) = gauss(rng);
      norm = vectors.col(j).norm();
    }
    vectors.col(j) /= norm;
  }
  return DirectionSet(std::move(vectors), seed);
}

absl::StatusOr<DirectionSet> DirectionSet::FromColumns(Eigen::MatrixXd columns,
                                                       uint64_t seed) {
  if (columns.rows() < 1 || columns.cols() < 1) {
    return absl::InvalidArgumentError("direction set must be non-empty");
  }
  for (Eigen::Index j = 0; j < columns.cols(); ++j) {
    const double norm = columns.col(j).norm();
    if (!(std::abs(norm - 1.0) <= 1e-12)) {
      return absl::InvalidArgumentError(
          absl::StrCat("direction ", j, " has norm ", norm));
    }
  }
  return DirectionSet(std::move(columns), seed);
}

int DefaultDirectionCount(int dim) { return dim < 20 ? 500 : 1000; }

absl::StatusOr<Eigen::VectorXd> Project(const Dataset& data,
                                        const Eigen::VectorXd& u) {
  if (data.cols() != u.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("dimension mismatch: data has ", data.cols(),
                     " columns, direction has length ", u.size()));
  }
  return Eigen::VectorXd(data * u);
}

absl::StatusOr<SortedProjections> SortedProjections::Compute(
    const Dataset& data, const DirectionSet& dirs) {
  if (data.rows() == 0) {
    return absl::InvalidArgumentError("empty dataset");
  }
  if (data.cols() != dirs.dim()) {
    return absl::InvalidArgumentError(
        absl::StrCat("dimension mismatch: data has ", data.cols(),
                     " columns, directions live in R^", dirs.dim()));
  }
  if (!data.allFinite()) {
    return absl::InvalidArgumentError("dataset contains NaN or infinity");
  }
  Eigen::MatrixXd values = data * dirs.matrix();
  for (Eigen::Index j = 0; j < values.cols(); ++j) {
    double* begin = values.data() + j * values.rows();
    std::sort(begin, begin + values.rows());
  }
  return SortedProjections(std::move(values), dirs.matrix());
}

}  // namespace pdmedian
