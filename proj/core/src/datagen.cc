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

#include "pdmedian/datagen.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>

#include "Eigen/Cholesky"
#include "absl/strings/str_cat.h"
#include "pdmedian/rng.h"

namespace pdmedian {
namespace {

Eigen::VectorXd OrDefault(const Eigen::VectorXd& v, int d, double fill) {
  return v.size() == 0 ? Eigen::VectorXd::Constant(d, fill) : v;
}

absl::Status CheckLength(const Eigen::VectorXd& v, int d, const char* what) {
  if (v.size() != 0 && v.size() != d) {
    return absl::InvalidArgumentError(
        absl::StrCat(what, " has length ", v.size(), ", expected ", d));
  }
  return absl::OkStatus();
}

struct Validator {
  int d;
  absl::Status operator()(const GaussianDist& g) const {
    if (auto st = CheckLength(g.mean, d, "mean"); !st.ok()) return st;
    if (g.covariance.size() == 0) return absl::OkStatus();
    if (g.covariance.rows() != d || g.covariance.cols() != d) {
      return absl::InvalidArgumentError("covariance must be d x d");
    }
    Eigen::LLT<Eigen::MatrixXd> llt(g.covariance);
    if (llt.info() != Eigen::Success ||
        !g.covariance.isApprox(g.covariance.transpose())) {
      return absl::InvalidArgumentError(
          "covariance must be symmetric positive definite");
    }
    return absl::OkStatus();
  }
  absl::Status operator()(const ContaminatedGaussianDist& c) const {
    if (!(c.fraction >= 0.0 && c.fraction < 0.5)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "contamination fraction must lie in [0, 1/2), got ", c.fraction));
    }
    return CheckLength(c.shift, d, "shift");
  }
  absl::Status operator()(const CauchyProductDist& c) const {
    if (auto st = CheckLength(c.location, d, "location"); !st.ok()) return st;
    if (auto st = CheckLength(c.scale, d, "scale"); !st.ok()) return st;
    if (c.scale.size() != 0 && !(c.scale.array() > 0.0).all()) {
      return absl::InvalidArgumentError("Cauchy scales must be positive");
    }
    return absl::OkStatus();
  }
};

void FillStandardGaussian(Dataset& data, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (Eigen::Index r = 0; r < data.rows(); ++r) {
    for (Eigen::Index c = 0; c < data.cols(); ++c) data(r, c) = gauss(rng);
  }
}

}  // namespace

absl::Status DataSpec::Validate() const {
  if (n < 1 || d < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("need n >= 1 and d >= 1, got ", n, " and ", d));
  }
  return std::visit(Validator{d}, dist);
}

absl::StatusOr<GeneratedData> Generate(const DataSpec& spec) {
  if (auto st = spec.Validate(); !st.ok()) return st;
  Rng rng(spec.seed);
  GeneratedData out;
  out.data.resize(spec.n, spec.d);

  if (const auto* g = std::get_if<GaussianDist>(&spec.dist)) {
    FillStandardGaussian(out.data, rng);
    if (g->covariance.size() != 0) {
      const Eigen::MatrixXd lower = g->covariance.llt().matrixL();
      out.data = out.data * lower.transpose();
    }
    out.true_location = OrDefault(g->mean, spec.d, 0.0);
    out.data.rowwise() += out.true_location.transpose();
  } else if (const auto* c = std::get_if<ContaminatedGaussianDist>(&spec.dist)) {
    FillStandardGaussian(out.data, rng);
    const Eigen::VectorXd shift = OrDefault(c->shift, spec.d, 5.0);
    const int m = static_cast<int>(std::floor(c->fraction * spec.n));
    std::vector<int> rows(static_cast<size_t>(spec.n));
    std::iota(rows.begin(), rows.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    rows.resize(static_cast<size_t>(m));
    std::sort(rows.begin(), rows.end());
    for (int r : rows) out.data.row(r) += shift.transpose();
    out.contaminated_rows = std::move(rows);
    out.true_location = Eigen::VectorXd::Zero(spec.d);
  } else {
    const auto& cauchy = std::get<CauchyProductDist>(spec.dist);
    const Eigen::VectorXd loc = OrDefault(cauchy.location, spec.d, 0.0);
    const Eigen::VectorXd scale = OrDefault(cauchy.scale, spec.d, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (Eigen::Index r = 0; r < out.data.rows(); ++r) {
      for (Eigen::Index col = 0; col < out.data.cols(); ++col) {
        double u = uniform(rng);
        while (u == 0.0) u = uniform(rng);
        out.data(r, col) =
            loc[col] + scale[col] * std::tan(std::numbers::pi * (u - 0.5));
      }
    }
    out.true_location = loc;
  }
  return out;
}

absl::Status WriteDatasetCsv(const Dataset& data, const std::string& path) {
  std::ofstream file(path);
  if (!file) {
    return absl::UnavailableError(absl::StrCat("cannot open ", path));
  }
  char buf[32];
  for (Eigen::Index r = 0; r < data.rows(); ++r) {
    for (Eigen::Index c = 0; c < data.cols(); ++c) {
      if (c > 0) file << ',';
      const auto res = std::to_chars(buf, buf + sizeof(buf), data(r, c));
      file.write(buf, res.ptr - buf);
    }
    file << '\n';
  }
  file.flush();
  if (!file) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

}  // namespace pdmedian
