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

#include "pdmedian/results_io.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "nlohmann/json.hpp"

namespace pdmedian {
namespace {

void AppendDouble(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

template <typename T>
bool ParseNumber(std::string_view field, T& out) {
  const char* end = field.data() + field.size();
  const auto res = std::from_chars(field.data(), end, out);
  return res.ec == std::errc() && res.ptr == end;
}

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

absl::Status WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary);
  if (!file) return absl::UnavailableError(absl::StrCat("cannot open ", path));
  file << contents;
  file.flush();
  if (!file) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

}  // namespace

std::string FormatResultsCsv(std::span<const ResultRow> rows) {
  std::string out(kResultsCsvHeader);
  out += '\n';
  for (const ResultRow& row : rows) {
    absl::StrAppend(&out, row.estimator, ",", row.distribution, ",", row.d, ",",
                    row.rep, ",", row.released ? "1" : "0", ",");
    if (row.sq_error.has_value()) AppendDouble(out, *row.sq_error);
    out += ',';
    AppendDouble(out, row.wall_ms);
    absl::StrAppend(&out, ",", row.seed, "\n");
  }
  return out;
}

absl::StatusOr<std::vector<ResultRow>> ParseResultsCsv(std::string_view text) {
  std::vector<std::string_view> lines = Split(text, '\n');
  std::erase_if(lines, [](std::string_view l) { return l.empty(); });
  if (lines.empty() || lines.front() != kResultsCsvHeader) {
    return absl::InvalidArgumentError("missing or unexpected CSV header");
  }
  std::vector<ResultRow> rows;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string_view> f = Split(lines[i], ',');
    auto bad = [&](std::string_view what) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", i + 1, ": bad ", std::string(what)));
    };
    if (f.size() != 8) return bad("field count");
    ResultRow row;
    row.estimator = std::string(f[0]);
    row.distribution = std::string(f[1]);
    if (!ParseNumber(f[2], row.d)) return bad("d");
    if (!ParseNumber(f[3], row.rep)) return bad("rep");
    if (f[4] != "0" && f[4] != "1") return bad("released");
    row.released = f[4] == "1";
    if (!f[5].empty()) {
      double sq = 0.0;
      if (!ParseNumber(f[5], sq)) return bad("sq_error");
      row.sq_error = sq;
    }
    if (!ParseNumber(f[6], row.wall_ms)) return bad("wall_ms");
    if (!ParseNumber(f[7], row.seed)) return bad("seed");
    rows.push_back(std::move(row));
  }
  return rows;
}

absl::Status WriteResultsCsv(std::span<const ResultRow> rows,
                             const std::string& path) {
  return WriteFile(path, FormatResultsCsv(rows));
}

absl::StatusOr<std::vector<ResultRow>> ReadResultsCsv(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << file.rdbuf();
  return ParseResultsCsv(buffer.str());
}

std::string FormatSummaryJson(const ExperimentConfig& config,
                              std::span<const CellSummary> cells) {
  nlohmann::ordered_json root;
  auto& cfg = root["config"];
  cfg["n"] = config.n;
  cfg["dims"] = config.dims;
  cfg["reps"] = config.reps;
  cfg["estimator"] = config.estimator.name();
  cfg["alpha"] = config.estimator.alpha;
  cfg["epsilon"] = config.epsilon;
  cfg["delta"] = config.delta.value_or(10.0 / config.n);
  cfg["tau"] = config.tau;
  cfg["eta_constant"] = config.eta_constant;
  cfg["n_dirs"] = config.directions.n_dirs;
  cfg["steps"] = config.sampler.steps;
  cfg["seed"] = config.seed;
  auto& list = root["cells"];
  list = nlohmann::ordered_json::array();
  for (const CellSummary& c : cells) {
    nlohmann::ordered_json cell;
    cell["estimator"] = c.estimator;
    cell["distribution"] = c.distribution;
    cell["d"] = c.d;
    cell["reps"] = c.reps;
    cell["released"] = c.released;
    if (c.ermse.has_value()) {
      cell["ermse"] = *c.ermse;
    } else {
      cell["ermse"] = nullptr;
    }
    cell["abstain_rate"] = c.abstain_rate;
    list.push_back(std::move(cell));
  }
  return root.dump(2) + "\n";
}

absl::Status WriteSummaryJson(const ExperimentConfig& config,
                              std::span<const CellSummary> cells,
                              const std::string& path) {
  return WriteFile(path, FormatSummaryJson(config, cells));
}

std::string SummaryPathFor(const std::string& csv_path) {
  constexpr std::string_view kExt = ".csv";
  if (csv_path.size() >= kExt.size() &&
      csv_path.compare(csv_path.size() - kExt.size(), kExt.size(), kExt) == 0) {
    return csv_path.substr(0, csv_path.size() - kExt.size()) + ".summary.json";
  }
  return csv_path + ".summary.json";
}

}  // namespace pdmedian
