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

#include "pdmedian/private_median.h"

#include <bit>
#include <cmath>
#include <random>
#include <vector>

#include "absl/strings/str_cat.h"
#include "pdmedian/rng.h"

namespace pdmedian {
namespace {

// Seed streams split off the caller's seed.
constexpr uint64_t kDirectionStream = 1;
constexpr uint64_t kMechanismStream = 2;

uint64_t HashCombine(uint64_t h, uint64_t v) { return MixSeed(h ^ MixSeed(v)); }
uint64_t HashCombine(uint64_t h, double v) {
  return HashCombine(h, std::bit_cast<uint64_t>(v));
}

}  // namespace

absl::Status DescentConfig::Validate() const {
  if (max_iterations < 1) {
    return absl::InvalidArgumentError("descent needs at least one iteration");
  }
  if (!(initial_step_scale > 0.0)) {
    return absl::InvalidArgumentError("descent step scale must be > 0");
  }
  if (!(decay > 0.0 && decay <= 1.0)) {
    return absl::InvalidArgumentError("descent decay must lie in (0, 1]");
  }
  return absl::OkStatus();
}

Eigen::VectorXd CoordinatewiseMedian(const Dataset& data) {
  Eigen::VectorXd out(data.cols());
  std::vector<double> column(static_cast<size_t>(data.rows()));
  for (Eigen::Index c = 0; c < data.cols(); ++c) {
    for (Eigen::Index r = 0; r < data.rows(); ++r) column[r] = data(r, c);
    const auto mid = column.begin() + (sorted::MedianIndex(
                                           static_cast<int>(data.rows())) -
                                       1);
    std::nth_element(column.begin(), mid, column.end());
    out[c] = *mid;
  }
  return out;
}

absl::StatusOr<Eigen::VectorXd> MinimizeOutlyingness(
    const Outlyingness& outlyingness, const Eigen::VectorXd& start,
    const DescentConfig& config) {
  if (auto st = config.Validate(); !st.ok()) return st;
  if (start.size() != outlyingness.dim()) {
    return absl::InvalidArgumentError("start point has wrong dimension");
  }
  Eigen::VectorXd x = start;
  Eigen::VectorXd best = start;
  Outlyingness::Value v = outlyingness.Evaluate(x);
  double best_value = v.value;
  double step = config.initial_step_scale * outlyingness.stats().min_scale;
  for (int t = 0; t < config.max_iterations; ++t) {
    const Eigen::VectorXd g = outlyingness.GradientAt(v);
    x -= (step / g.norm()) * g;
    step *= config.decay;
    v = outlyingness.Evaluate(x);
    if (v.value < best_value) {
      best_value = v.value;
      best = x;
    }
  }
  return best;
}

absl::StatusOr<DirectionSet> DirectionsForSeed(int dim,
                                               const DirectionConfig& config,
                                               uint64_t seed) {
  return DirectionSet::Sample(config.Resolve(dim), dim,
                              DeriveSeed(seed, {kDirectionStream}));
}

absl::StatusOr<Eigen::VectorXd> NonPrivatePdMedian(
    const Dataset& data, const EstimatorPair& est,
    const DirectionConfig& dirs_config, const DescentConfig& descent_config,
    uint64_t seed) {
  auto dirs = DirectionsForSeed(static_cast<int>(data.cols()), dirs_config,
                                seed);
  if (!dirs.ok()) return dirs.status();
  auto stats = ComputeProjectedStats(data, *dirs, est);
  if (!stats.ok()) return stats.status();
  auto outlyingness = Outlyingness::Create(*stats, *dirs);
  if (!outlyingness.ok()) return outlyingness.status();
  return MinimizeOutlyingness(*outlyingness, CoordinatewiseMedian(data),
                              descent_config);
}

absl::StatusOr<MedianResult> PrivatePdMedian(
    const Dataset& data, const EstimatorPair& est, const PrivacyParams& params,
    const DirectionConfig& dirs_config, const SamplerConfig& sampler_config,
    uint64_t seed, const PrivateMedianOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  if (auto st = params.Validate(); !st.ok()) return st;
  if (auto st = sampler_config.Validate(); !st.ok()) return st;
  if (data.rows() < 5 || data.cols() < 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "need n >= 5 and d >= 1, got ", data.rows(), " x ", data.cols()));
  }

  MedianResult result;
  result.seed = seed;
  result.params_hash = HashParams(est, params, dirs_config, sampler_config);

  auto dirs = DirectionsForSeed(static_cast<int>(data.cols()), dirs_config,
                                seed);
  if (!dirs.ok()) return dirs.status();
  auto proj = SortedProjections::Compute(data, *dirs);
  if (!proj.ok()) return proj.status();
  auto stats = ComputeProjectedStats(*proj, est);
  if (!stats.ok()) return stats.status();
  auto margin =
      SafetyMarginLowerBound(*proj, *stats, params, est, options.margin);
  if (!margin.ok()) return margin.status();
  result.margin = *margin;

  Rng rng(DeriveSeed(seed, {kMechanismStream}));
  result.test = RunThresholdTest(margin->safety_margin, params, rng);
  result.test.k_stop = margin->k_stop;
  result.test.volume_ratio = margin->volume_ratio;
  result.degenerate = stats->degenerate;
  if (result.degenerate) result.test.passed = false;

  if (result.test.passed) {
    auto outlyingness = Outlyingness::Create(*stats, *dirs);
    if (!outlyingness.ok()) return outlyingness.status();
    SamplerConfig sampler = sampler_config;
    if (sampler.init == SamplerInit::kNonPrivateMedian) {
      auto start = MinimizeOutlyingness(
          *outlyingness, CoordinatewiseMedian(data), options.descent);
      if (!start.ok()) return start.status();
      // The minimizer is a point where several directions attain the max, so
      // the chain starts one undrifted noise step away from it.
      const double step = ResolveStepSize(sampler, *stats, params);
      std::normal_distribution<double> gauss(0.0, 1.0);
      for (Eigen::Index i = 0; i < start->size(); ++i) {
        (*start)[i] += std::sqrt(2.0 * step) * gauss(rng);
      }
      sampler.init = SamplerInit::kAtPoint;
      sampler.init_point = *std::move(start);
    }
    auto sample = LangevinSample(*outlyingness, params, sampler, rng);
    if (!sample.ok()) return sample.status();
    result.point = std::move(sample->point);
    result.inside_level_set = sample->inside_level_set;
  }
  result.wall_time = std::chrono::steady_clock::now() - started;
  return result;
}

uint64_t HashParams(const EstimatorPair& est, const PrivacyParams& params,
                    const DirectionConfig& dirs_config,
                    const SamplerConfig& sampler_config) {
  uint64_t h = MixSeed(0x70646d656469616eULL);
  h = HashCombine(h, static_cast<uint64_t>(est.location));
  h = HashCombine(h, static_cast<uint64_t>(est.scale));
  h = HashCombine(h, est.alpha);
  h = HashCombine(h, params.epsilon);
  h = HashCombine(h, params.delta);
  h = HashCombine(h, params.eta);
  h = HashCombine(h, params.tau);
  h = HashCombine(h, static_cast<uint64_t>(dirs_config.n_dirs));
  h = HashCombine(h, static_cast<uint64_t>(sampler_config.steps));
  h = HashCombine(h, sampler_config.step_size.value_or(-1.0));
  h = HashCombine(h, sampler_config.step_scale);
  h = HashCombine(h, static_cast<uint64_t>(sampler_config.init));
  return h;
}

}  // namespace pdmedian
