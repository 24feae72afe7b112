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

#ifndef PDMEDIAN_DATAGEN_H_
#define PDMEDIAN_DATAGEN_H_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pdmedian/directions.h"

namespace pdmedian {

// N(mean, covariance). An empty mean means the origin and an empty
// covariance means the identity.
struct GaussianDist {
  Eigen::VectorXd mean;
  Eigen::MatrixXd covariance;
};

// Standard Gaussian in which floor(fraction * n) rows, placed by a seeded
// permutation, are drawn from N(shift, I) instead. The estimand is the
// clean centre, the origin.
struct ContaminatedGaussianDist {
  double fraction = 0.25;
  Eigen::VectorXd shift;  // empty means (5, ..., 5)
};

// Independent Cauchy coordinates: location + scale * tan(pi (U - 1/2)).
// Empty vectors mean location 0 and scale 1.
struct CauchyProductDist {
  Eigen::VectorXd location;
  Eigen::VectorXd scale;
};

struct DataSpec {
  std::variant<GaussianDist, ContaminatedGaussianDist, CauchyProductDist>
      dist;
  int n = 0;
  int d = 0;
  uint64_t seed = 0;

  absl::Status Validate() const;
};

struct GeneratedData {
  Dataset data;
  Eigen::VectorXd true_location;
  // Rows drawn from the contaminating component, ascending.
  std::vector<int> contaminated_rows;
};

absl::StatusOr<GeneratedData> Generate(const DataSpec& spec);

// Writes one observation per line, comma separated, full precision.
absl::Status WriteDatasetCsv(const Dataset& data, const std::string& path);

}  // namespace pdmedian

#endif  // PDMEDIAN_DATAGEN_H_
