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

#include "randbasis/experiments/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace randbasis::experiments {
namespace {

double sorted_quantile(const std::vector<double>& s, double q) {
  if (s.empty()) return std::numeric_limits<double>::quiet_NaN();
  const double h = q * static_cast<double>(s.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, s.size() - 1);
  return s[lo] + (h - static_cast<double>(lo)) * (s[hi] - s[lo]);
}

}  // namespace

double quantile(std::span<const double> values, double q) {
  std::vector<double> s(values.begin(), values.end());
  std::sort(s.begin(), s.end());
  return sorted_quantile(s, q);
}

BoxStats box_stats(std::span<const double> values) {
  std::vector<double> s;
  s.reserve(values.size());
  for (double v : values) {
    if (!std::isnan(v)) s.push_back(v);
  }
  std::sort(s.begin(), s.end());

  BoxStats b;
  b.count = s.size();
  if (s.empty()) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    b.median = b.q1 = b.q3 = b.whisker_lo = b.whisker_hi = nan;
    b.mean = b.max = b.min = nan;
    return b;
  }
  b.median = sorted_quantile(s, 0.5);
  b.q1 = sorted_quantile(s, 0.25);
  b.q3 = sorted_quantile(s, 0.75);
  b.whisker_lo = sorted_quantile(s, kWhiskerLo);
  b.whisker_hi = sorted_quantile(s, kWhiskerHi);
  double sum = 0.0;
  for (double v : s) sum += v;
  b.mean = sum / static_cast<double>(s.size());
  b.min = s.front();
  b.max = s.back();
  for (double v : s) {
    if (v < b.whisker_lo || v > b.whisker_hi) b.outliers.push_back(v);
  }
  return b;
}

}  // namespace randbasis::experiments
