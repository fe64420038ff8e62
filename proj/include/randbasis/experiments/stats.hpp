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

// Box-plot statistics: 50% box between the quartiles and whiskers at the
// 12.5th and 87.5th percentiles, so the whiskers enclose 75% of the data.
// Quantiles interpolate linearly between order statistics.

#pragma once

#include <span>
#include <vector>

namespace randbasis::experiments {

// q in [0, 1]; NaN for an empty sample. Input need not be sorted.
double quantile(std::span<const double> values, double q);

struct BoxStats {
  std::size_t count = 0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double whisker_lo = 0.0;
  double whisker_hi = 0.0;
  double mean = 0.0;
  double max = 0.0;
  double min = 0.0;
  // Points outside [whisker_lo, whisker_hi].
  std::vector<double> outliers;
};

inline constexpr double kWhiskerLo = 0.125;
inline constexpr double kWhiskerHi = 0.875;

// NaN entries are ignored. All fields are NaN when nothing remains.
BoxStats box_stats(std::span<const double> values);

}  // namespace randbasis::experiments
