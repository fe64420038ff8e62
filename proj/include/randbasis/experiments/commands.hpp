// Copyright 2026 The randbasis Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Experiment commands behind the CLI. Each command reads a Config, fans
// trials out over a worker pool and writes CSV data, a JSON manifest and
// SVG figures into an output directory.
//
// Trial i always uses seed + i (chains additionally use the dimension as the
// stream id), so the CSVs do not depend on the worker count.

#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "randbasis/experiments/config.hpp"
#include "randbasis/experiments/csv.hpp"

namespace randbasis::experiments {

inline constexpr const char* kVersion = "0.1.0";

// Calls fn(i) for every i in [0, count) on up to `workers` threads. The
// first exception thrown by fn is rethrown after all threads join.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& fn);

// "trace_007.csv" style names, at least three digits.
std::string numbered_file(const std::string& prefix, std::size_t index,
                          const std::string& extension);

// Per-step summary of normalized errors. series[t][s] is trial t after
// step s + 1; trials may be shorter than others. bound may be empty.
CsvWriter step_summary(const std::vector<std::vector<double>>& series,
                       const std::vector<double>& bound);

// Runs config.command(), creating out_dir if needed. Returns the manifest
// that was also written to out_dir/manifest.json.
nlohmann::json run_experiment(const Config& config,
                              const std::filesystem::path& out_dir,
                              std::ostream& log);

}  // namespace randbasis::experiments
