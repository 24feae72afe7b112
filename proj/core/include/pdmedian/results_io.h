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

#ifndef PDMEDIAN_RESULTS_IO_H_
#define PDMEDIAN_RESULTS_IO_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pdmedian/experiment.h"

namespace pdmedian {

inline constexpr std::string_view kResultsCsvHeader =
    "estimator,distribution,d,rep,released,sq_error,wall_ms,seed";

// CSV with the header above. `released` is 0/1; `sq_error` is empty for
// abstentions; reals use the shortest representation that round-trips.
std::string FormatResultsCsv(std::span<const ResultRow> rows);
absl::StatusOr<std::vector<ResultRow>> ParseResultsCsv(std::string_view text);

absl::Status WriteResultsCsv(std::span<const ResultRow> rows,
                             const std::string& path);
absl::StatusOr<std::vector<ResultRow>> ReadResultsCsv(const std::string& path);

// {"config": {...}, "cells": [{"estimator", "distribution", "d", "reps",
//  "released", "ermse" (null when nothing was released), "abstain_rate"}]}
std::string FormatSummaryJson(const ExperimentConfig& config,
                              std::span<const CellSummary> cells);
absl::Status WriteSummaryJson(const ExperimentConfig& config,
                              std::span<const CellSummary> cells,
                              const std::string& path);

// The summary path written next to a results CSV: "out.csv" maps to
// "out.summary.json".
std::string SummaryPathFor(const std::string& csv_path);

}  // namespace pdmedian

#endif  // PDMEDIAN_RESULTS_IO_H_
