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

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace randbasis {

// A real function on [0, 1] sampled at the midpoints x_k = (k + 1/2) / size
// of a uniform grid. L2 quantities use the midpoint rule with weight 1/size.
class GridFunction {
 public:
  // Throws std::invalid_argument if fewer than 2 samples or any sample is
  // not finite.
  explicit GridFunction(std::vector<double> values);

  static GridFunction constant(std::size_t grid_size, double value);
  static GridFunction zeros(std::size_t grid_size) {
    return constant(grid_size, 0.0);
  }

  static double node(std::size_t k, std::size_t grid_size) {
    return (static_cast<double>(k) + 0.5) / static_cast<double>(grid_size);
  }

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }
  std::span<const double> values() const { return values_; }

  bool operator==(const GridFunction&) const = default;

 private:
  std::vector<double> values_;
};

GridFunction operator+(const GridFunction& f, const GridFunction& g);
GridFunction operator-(const GridFunction& f, const GridFunction& g);
GridFunction operator*(double scale, const GridFunction& f);

// Samples `evaluator` on the midpoint grid. A non-finite sample is rejected
// with a message naming the offending node.
GridFunction make_grid_function(const std::function<double(double)>& evaluator,
                                std::size_t grid_size);

// Midpoint quadrature of the integral of f*g over [0, 1].
double l2_inner(const GridFunction& f, const GridFunction& g);
double l2_norm_sq(const GridFunction& f);

// residual_sq / target_norm_sq; throws when the target norm is not positive.
double normalized_error(double residual_sq, double target_norm_sq);

// 0.2 e^{-(10x-4)^2} + 0.5 e^{-(80x-40)^2} + 0.3 e^{-(80x-20)^2}, the
// three-bump benchmark target.
double three_bump(double x);

}  // namespace randbasis
