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
#include <string>
#include <variant>

#include "randbasis/grid_function.hpp"

namespace randbasis {

// x -> exp(-(w x + b)^2)
struct Gaussian {
  double w = 0.0;
  double b = 0.0;

  double operator()(double x) const;
  bool operator==(const Gaussian&) const = default;
};

// x -> 1 on the closed interval [center - width/2, center + width/2], else 0.
class Indicator {
 public:
  // Throws std::invalid_argument unless 0 <= center <= 1 and 0 <= width <= 1.
  Indicator(double center, double width);

  double center() const { return center_; }
  double width() const { return width_; }
  double operator()(double x) const;
  bool operator==(const Indicator&) const = default;

 private:
  double center_;
  double width_;
};

using BasisElement = std::variant<Gaussian, Indicator>;

double evaluate(const BasisElement& e, double x);
GridFunction eval_basis(const BasisElement& e, std::size_t grid_size);
std::string describe(const BasisElement& e);

}  // namespace randbasis
