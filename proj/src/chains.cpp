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

#include "randbasis/chains.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace randbasis {
namespace {

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

bool in_band(double cos_value, double tol) {
  return std::abs(cos_value) <= std::sin(tol);
}

}  // namespace

std::vector<double> sample_hypercube(std::size_t n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_hypercube: n must be >= 1");
  std::vector<double> x(n);
  for (double& v : x) v = rng.uniform(-1.0, 1.0);
  return x;
}

double cos_angle(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("cos_angle: size mismatch");
  }
  const double nx = std::sqrt(dot(x, x));
  const double ny = std::sqrt(dot(y, y));
  if (!(nx > 0.0 && ny > 0.0)) {
    throw std::invalid_argument("cos_angle: zero vector");
  }
  return std::clamp(dot(x, y) / (nx * ny), -1.0, 1.0);
}

ChainResult grow_chain(std::size_t n, double tol, Rng& rng,
                       std::size_t max_length, bool keep_vectors) {
  if (!(tol > 0.0 && tol < std::numbers::pi / 2.0)) {
    throw std::invalid_argument("grow_chain: tol must lie in (0, pi/2)");
  }
  if (max_length < 1) {
    throw std::invalid_argument("grow_chain: max_length must be >= 1");
  }
  const double limit = std::sin(tol);

  ChainResult out;
  out.n = n;
  out.tol = tol;
  out.seed = rng.seed();

  std::vector<std::vector<double>> kept;
  std::vector<double> norms;
  for (;;) {
    if (kept.size() >= max_length) {
      out.capped = true;
      break;
    }
    std::vector<double> x = sample_hypercube(n, rng);
    const double nx = std::sqrt(dot(x, x));
    if (!(nx > 0.0)) continue;
    bool ok = true;
    for (std::size_t j = 0; j < kept.size() && ok; ++j) {
      const double c = dot(x, kept[j]) / (nx * norms[j]);
      ok = std::abs(c) <= limit;
    }
    if (!ok) break;
    kept.push_back(std::move(x));
    norms.push_back(nx);
  }
  out.length = kept.size();
  if (keep_vectors) out.vectors = std::move(kept);
  return out;
}

bool verify_chain(const ChainResult& chain) {
  if (chain.vectors.size() != chain.length) return false;
  for (std::size_t i = 0; i < chain.vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.vectors.size(); ++j) {
      if (!in_band(cos_angle(chain.vectors[i], chain.vectors[j]), chain.tol)) {
        return false;
      }
    }
  }
  return true;
}

double AngleHistogram::bin_width() const {
  return std::numbers::pi / static_cast<double>(counts.size());
}

std::size_t AngleHistogram::total() const {
  std::size_t t = 0;
  for (std::size_t c : counts) t += c;
  return t;
}

double AngleHistogram::fraction_abs_cos_at_most(double c) const {
  if (angles.empty()) return 0.0;
  std::size_t hits = 0;
  for (double a : angles) {
    if (std::abs(std::cos(a)) <= c) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(angles.size());
}

AngleHistogram angle_histogram(std::size_t n, std::size_t count,
                               std::size_t bins, Rng& rng) {
  if (count < 2) throw std::invalid_argument("angle_histogram: count >= 2");
  if (bins < 1) throw std::invalid_argument("angle_histogram: bins >= 1");
  std::vector<double> ref;
  do {
    ref = sample_hypercube(n, rng);
  } while (!(dot(ref, ref) > 0.0));

  AngleHistogram h;
  h.counts.assign(bins, 0);
  h.angles.reserve(count);
  const double width = h.bin_width();
  while (h.angles.size() < count) {
    const std::vector<double> x = sample_hypercube(n, rng);
    if (!(dot(x, x) > 0.0)) continue;
    const double a = std::acos(cos_angle(ref, x));
    h.angles.push_back(a);
    const auto b = std::min(bins - 1, static_cast<std::size_t>(a / width));
    ++h.counts[b];
  }
  return h;
}

}  // namespace randbasis
