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

#include "pdmedian/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "absl/strings/str_cat.h"
#include "pdmedian/rng.h"

namespace pdmedian {
namespace {

struct Job {
  Distribution dist;
  int d;
  int rep;
};

struct JobOutput {
  std::vector<ResultRow> rows;
  absl::Status status;
};

double Millis(std::chrono::nanoseconds ns) {
  return std::chrono::duration<double, std::milli>(ns).count();
}

DataSpec MakeSpec(const ExperimentConfig& config, Distribution dist, int d,
                  uint64_t seed) {
  DataSpec spec;
  spec.n = config.n;
  spec.d = d;
  spec.seed = seed;
  switch (dist) {
    case Distribution::kGaussian:
      spec.dist = GaussianDist{};
      break;
    case Distribution::kContaminated:
      spec.dist = ContaminatedGaussianDist{
          config.contamination_fraction,
          Eigen::VectorXd::Constant(d, config.contamination_shift)};
      break;
    case Distribution::kCauchy:
      spec.dist = CauchyProductDist{};
      break;
  }
  return spec;
}

JobOutput RunJob(const ExperimentConfig& config, const Job& job) {
  JobOutput out;
  const uint64_t rep_seed = DeriveSeed(
      config.seed, {static_cast<uint64_t>(job.dist),
                    static_cast<uint64_t>(job.d),
                    static_cast<uint64_t>(job.rep)});
  auto generated =
      Generate(MakeSpec(config, job.dist, job.d, DeriveSeed(rep_seed, {0})));
  if (!generated.ok()) {
    out.status = generated.status();
    return out;
  }
  const uint64_t estimator_seed = DeriveSeed(rep_seed, {1});
  const PrivacyParams params = config.ResolveParams(job.dist, job.d);

  for (Method method : config.methods) {
    ResultRow row;
    row.estimator = EstimatorName(method, config.estimator);
    row.distribution = std::string(DistributionName(job.dist));
    row.d = job.d;
    row.rep = job.rep;
    row.seed = rep_seed;
    const auto started = std::chrono::steady_clock::now();
    std::optional<Eigen::VectorXd> estimate;
    switch (method) {
      case Method::kPrivatePd: {
        auto result =
            PrivatePdMedian(generated->data, config.estimator, params,
                            config.directions, config.sampler, estimator_seed,
                            {config.descent, SafetyMarginOptions{}});
        if (!result.ok()) {
          out.status = result.status();
          return out;
        }
        estimate = result->point;
        break;
      }
      case Method::kNonPrivatePd: {
        auto result = NonPrivatePdMedian(generated->data, config.estimator,
                                         config.directions, config.descent,
                                         estimator_seed);
        if (!result.ok()) {
          out.status = result.status();
          return out;
        }
        estimate = *std::move(result);
        break;
      }
      case Method::kSampleMean:
        estimate = SampleMean(generated->data);
        break;
    }
    if (config.record_wall_time) {
      row.wall_ms = Millis(std::chrono::steady_clock::now() - started);
    }
    row.released = estimate.has_value();
    if (estimate.has_value()) {
      row.sq_error = (*estimate - generated->true_location).squaredNorm();
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::string_view DistributionName(Distribution dist) {
  switch (dist) {
    case Distribution::kGaussian:
      return "gaussian";
    case Distribution::kContaminated:
      return "contaminated";
    case Distribution::kCauchy:
      return "cauchy";
  }
  return "unknown";
}

absl::StatusOr<Distribution> ParseDistribution(std::string_view name) {
  if (name == "gaussian") return Distribution::kGaussian;
  if (name == "contaminated") return Distribution::kContaminated;
  if (name == "cauchy") return Distribution::kCauchy;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown distribution '", std::string(name), "'"));
}

absl::StatusOr<EtaRule> ParseEtaRule(std::string_view name) {
  if (name == "log") return EtaRule::kLog;
  if (name == "heavy-tail") return EtaRule::kHeavyTail;
  if (name == "auto") return EtaRule::kAuto;
  return absl::InvalidArgumentError(absl::StrCat("unknown eta rule '", std::string(name),
                                                 "'"));
}

absl::Status ExperimentConfig::Validate() const {
  if (n < 5) return absl::InvalidArgumentError("n must be at least 5");
  if (reps < 1) return absl::InvalidArgumentError("reps must be at least 1");
  if (dims.empty() || distributions.empty() || methods.empty()) {
    return absl::InvalidArgumentError(
        "dims, distributions and methods must be non-empty");
  }
  for (int d : dims) {
    if (d < 1) return absl::InvalidArgumentError("dimensions must be >= 1");
  }
  if (!(contamination_fraction >= 0.0 && contamination_fraction < 0.5)) {
    return absl::InvalidArgumentError(
        "contamination fraction must lie in [0, 1/2)");
  }
  if (auto st = estimator.Validate(); !st.ok()) return st;
  if (eta_rule == EtaRule::kFixed && !(eta > 0.0)) {
    return absl::InvalidArgumentError("fixed eta must be > 0");
  }
  if (eta_rule != EtaRule::kFixed && !(eta_constant > 0.0)) {
    return absl::InvalidArgumentError("eta constant must be > 0");
  }
  for (int d : dims) {
    for (Distribution dist : distributions) {
      if (auto st = ResolveParams(dist, d).Validate(); !st.ok()) return st;
    }
  }
  if (auto st = sampler.Validate(); !st.ok()) return st;
  if (auto st = descent.Validate(); !st.ok()) return st;
  if (threads < 0) return absl::InvalidArgumentError("threads must be >= 0");
  return absl::OkStatus();
}

PrivacyParams ExperimentConfig::ResolveParams(Distribution dist,
                                              int dim) const {
  PrivacyParams p;
  p.epsilon = epsilon;
  p.delta = delta.value_or(10.0 / n);
  p.tau = tau;
  EtaRule rule = eta_rule;
  if (rule == EtaRule::kAuto) {
    rule = dist == Distribution::kCauchy ? EtaRule::kHeavyTail : EtaRule::kLog;
  }
  switch (rule) {
    case EtaRule::kFixed:
      p.eta = eta;
      break;
    case EtaRule::kLog:
      p.eta = LogEtaRule(n, eta_constant);
      break;
    case EtaRule::kHeavyTail:
    case EtaRule::kAuto:
      p.eta = HeavyTailEtaRule(n, dim, eta_constant);
      break;
  }
  return p;
}

std::string EstimatorName(Method method, const EstimatorPair& est) {
  switch (method) {
    case Method::kPrivatePd:
      return "private_pd_" + est.name();
    case Method::kNonPrivatePd:
      return "nonprivate_pd_" + est.name();
    case Method::kSampleMean:
      return "sample_mean";
  }
  return "unknown";
}

Eigen::VectorXd SampleMean(const Dataset& data) {
  return data.colwise().mean().transpose();
}

std::vector<CellSummary> Summarize(std::span<const ResultRow> rows) {
  struct Acc {
    int reps = 0;
    int released = 0;
    double sum_sq = 0.0;
  };
  std::map<std::tuple<std::string, std::string, int>, Acc> cells;
  for (const ResultRow& row : rows) {
    Acc& acc = cells[{row.estimator, row.distribution, row.d}];
    ++acc.reps;
    if (row.released && row.sq_error.has_value()) {
      ++acc.released;
      acc.sum_sq += *row.sq_error;
    }
  }
  std::vector<CellSummary> out;
  out.reserve(cells.size());
  for (const auto& [key, acc] : cells) {
    CellSummary cell;
    std::tie(cell.estimator, cell.distribution, cell.d) = key;
    cell.reps = acc.reps;
    cell.released = acc.released;
    if (acc.released > 0) cell.ermse = std::sqrt(acc.sum_sq / acc.released);
    cell.abstain_rate =
        static_cast<double>(acc.reps - acc.released) / acc.reps;
    out.push_back(std::move(cell));
  }
  return out;
}

absl::StatusOr<ExperimentResult> RunExperiment(const ExperimentConfig& config) {
  if (auto st = config.Validate(); !st.ok()) return st;

  std::vector<Job> jobs;
  for (Distribution dist : config.distributions) {
    for (int d : config.dims) {
      for (int rep = 0; rep < config.reps; ++rep) jobs.push_back({dist, d, rep});
    }
  }
  std::vector<JobOutput> outputs(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < jobs.size(); i = next++) {
      outputs[i] = RunJob(config, jobs[i]);
    }
  };
  int threads = config.threads > 0
                    ? config.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, static_cast<int>(jobs.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  ExperimentResult result;
  for (JobOutput& out : outputs) {
    if (!out.status.ok() && result.status.ok()) result.status = out.status;
    for (ResultRow& row : out.rows) result.rows.push_back(std::move(row));
  }
  std::sort(result.rows.begin(), result.rows.end(),
            [](const ResultRow& a, const ResultRow& b) {
              return std::tie(a.estimator, a.distribution, a.d, a.rep) <
                     std::tie(b.estimator, b.distribution, b.d, b.rep);
            });
  result.summary = Summarize(result.rows);
  return result;
}

}  // namespace pdmedian
