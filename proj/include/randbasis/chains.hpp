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

// Quasi-orthogonal chains of random hypercube vectors and angle statistics.

#pragma once

#include <cstdint>
#include <numbers>
#include <vector>

#include "randbasis/philox.hpp"

namespace randbasis {

// Half-width of the accepted band around pi/2 used in the reference
// experiment; |cos| <= sin(kDefaultChainTol) ~= 0.0581.
inline constexpr double kDefaultChainTol = 0.037 * std::numbers::pi / 2.0;
inline constexpr std::size_t kDefaultMaxChainLength = 1000000;

// n independent Uniform[-1, 1] coordinates.
std::vector<double> sample_hypercube(std::size_t n, Rng& rng);

// <x, y> / (|x| |y|) clamped to [-1, 1]. Throws on a zero vector or a size
// mismatch.
double cos_angle(const std::vector<double>& x, const std::vector<double>& y);

struct ChainResult {
  std::size_t n = 0;
  double tol = 0.0;
  std::size_t length = 0;
  std::uint64_t seed = 0;
  // Growth stopped at max_length rather than at a rejection.
  bool capped = false;
  // Retained vectors, only when requested.
  std::vector<std::vector<double>> vectors;
};

// Draws hypercube vectors and keeps each one whose angle to every retained
// vector lies in [pi/2 - tol, pi/2 + tol]; the first rejection ends the chain.
ChainResult grow_chain(std::size_t n, double tol, Rng& rng,
                       std::size_t max_length = kDefaultMaxChainLength,
                       bool keep_vectors = false);

// Independent pairwise re-check of a chain grown with keep_vectors.
bool verify_chain(const ChainResult& chain);

struct AngleHistogram {
  std::vector<std::size_t> counts;  // equal-width bins over [0, pi]
  std::vector<double> angles;       // raw angles, in draw order

  std::size_t bins() const { return counts.size(); }
  double bin_width() const;
  double bin_lo(std::size_t b) const { return bin_width() * b; }
  std::size_t total() const;
  // Fraction of angles with |cos| <= c.
  double fraction_abs_cos_at_most(double c) const;
};

// One reference vector, then `count` further hypercube vectors binned by
// their angle to it. Throws for count < 2 or bins < 1.
AngleHistogram angle_histogram(std::size_t n, std::size_t count,
                               std::size_t bins, Rng& rng);

}  // namespace randbasis
