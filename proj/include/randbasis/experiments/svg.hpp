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

// Static SVG plots drawn from data already written to CSV: line series,
// box plots and histogram bars on linear or log10 axes.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "randbasis/experiments/stats.hpp"

namespace randbasis::experiments {

struct LineSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#d62728";
  bool dashed = false;
  bool markers = false;
};

struct BoxSeries {
  std::vector<double> x;
  std::vector<BoxStats> boxes;
  double width = 0.6;  // in x units
  bool show_mean = false;
};

struct Bar {
  double lo = 0.0;
  double hi = 0.0;
  double height = 0.0;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;
  std::vector<LineSeries> lines;
  BoxSeries boxes;
  std::vector<Bar> bars;
  // Optional vertical marker, e.g. pi/2 on an angle histogram.
  std::vector<double> x_markers;
};

std::string render_svg(const PlotSpec& spec);
void save_svg(const std::filesystem::path& path, const PlotSpec& spec);

}  // namespace randbasis::experiments
