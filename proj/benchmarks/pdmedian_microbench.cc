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

#include <cstdint>
#include <random>
#include <utility>

#include "Eigen/Core"
#include "benchmark/benchmark.h"
#include "pdmedian/datagen.h"
#include "pdmedian/directions.h"
#include "pdmedian/outlyingness.h"
#include "pdmedian/ptr.h"
#include "pdmedian/rng.h"
#include "pdmedian/sampler.h"
#include "pdmedian/univariate.h"

namespace pdmedian {
namespace {

constexpr uint64_t kDataSeed = 1;
constexpr uint64_t kDirectionSeed = 2;

// Standard Gaussian data with n = range(0) rows and d = range(1) columns,
// projected onto the default number of directions.
struct Fixture {
  Dataset data;
  DirectionSet dirs;
  SortedProjections proj;
  ProjectedStats stats;
};

Fixture MakeFixture(int n, int d) {
  DataSpec spec{.dist = GaussianDist{}, .n = n, .d = d, .seed = kDataSeed};
  Dataset data = Generate(spec).value().data;
  DirectionSet dirs =
      DirectionSet::Sample(DefaultDirectionCount(d), d, kDirectionSeed)
          .value();
  SortedProjections proj = SortedProjections::Compute(data, dirs).value();
  ProjectedStats stats =
      ComputeProjectedStats(proj, EstimatorPair::MedianMad()).value();
  return {std::move(data), std::move(dirs), std::move(proj),
          std::move(stats)};
}

PrivacyParams ParamsFor(int n) {
  PrivacyParams params;
  params.epsilon = 10.0;
  params.eta = LogEtaRule(n);
  return params;
}

void BM_SortedProjections(benchmark::State& state) {
  Fixture f = MakeFixture(state.range(0), state.range(1));
  for (auto _ : state) {
    auto proj = SortedProjections::Compute(f.data, f.dirs);
    benchmark::DoNotOptimize(proj);
  }
  state.SetItemsProcessed(state.iterations() * f.data.rows() * f.dirs.size());
}
BENCHMARK(BM_SortedProjections)
    ->Args({1000, 2})
    ->Args({5000, 2})
    ->Args({2000, 10})
    ->Unit(benchmark::kMillisecond);

void BM_ComputeProjectedStats(benchmark::State& state) {
  Fixture f = MakeFixture(state.range(0), state.range(1));
  for (auto _ : state) {
    auto stats = ComputeProjectedStats(f.proj, EstimatorPair::MedianMad());
    benchmark::DoNotOptimize(stats);
  }
}
BENCHMARK(BM_ComputeProjectedStats)
    ->Args({1000, 2})
    ->Args({5000, 2})
    ->Args({2000, 10})
    ->Unit(benchmark::kMicrosecond);

void BM_OutlyingnessEvaluate(benchmark::State& state) {
  Fixture f = MakeFixture(1000, state.range(0));
  Outlyingness o = Outlyingness::Create(f.stats, f.dirs).value();
  Rng rng(3);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd x(state.range(0));
  for (auto& v : x) v = gauss(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(o.Evaluate(x));
  }
  state.SetItemsProcessed(state.iterations() * f.dirs.size());
}
BENCHMARK(BM_OutlyingnessEvaluate)->Arg(2)->Arg(5)->Arg(10)->Arg(20);

void BM_SafetyMarginLowerBound(benchmark::State& state) {
  const int n = state.range(0);
  Fixture f = MakeFixture(n, state.range(1));
  const PrivacyParams params = ParamsFor(n);
  for (auto _ : state) {
    auto result = SafetyMarginLowerBound(f.proj, f.stats, params,
                                         EstimatorPair::MedianMad());
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_SafetyMarginLowerBound)
    ->Args({1000, 2})
    ->Args({5000, 2})
    ->Args({2000, 10})
    ->Unit(benchmark::kMillisecond);

void BM_LangevinSample(benchmark::State& state) {
  const int n = 2000;
  Fixture f = MakeFixture(n, state.range(0));
  Outlyingness o = Outlyingness::Create(f.stats, f.dirs).value();
  const PrivacyParams params = ParamsFor(n);
  SamplerConfig config;
  config.steps = state.range(1);
  config.init = SamplerInit::kAtPoint;
  config.init_point = Eigen::VectorXd::Zero(state.range(0));
  Rng rng(4);
  for (auto _ : state) {
    auto sample = LangevinSample(o, params, config, rng);
    benchmark::DoNotOptimize(sample);
  }
  state.SetItemsProcessed(state.iterations() * config.steps);
}
BENCHMARK(BM_LangevinSample)
    ->Args({2, 2000})
    ->Args({10, 2000})
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace pdmedian

BENCHMARK_MAIN();
