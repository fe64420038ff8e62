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

#include "randbasis/grid_function.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace randbasis {
namespace {

void require_same_grid(const GridFunction& f, const GridFunction& g,
                       const char* what) {
  if (f.size() != g.size()) {
    throw std::invalid_argument(std::string(what) + ": grid sizes differ (" +
                                std::to_string(f.size()) + " vs " +
                                std::to_string(g.size()) + ")");
  }
}

}  // namespace

GridFunction::GridFunction(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw std::invalid_argument("GridFunction: grid_size must be >= 2, got " +
                                std::to_string(values_.size()));
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k])) {
      std::ostringstream msg;
      msg << "GridFunction: sample " << k << " is not finite";
      throw std::invalid_argument(msg.str());
    }
  }
}

GridFunction GridFunction::constant(std::size_t grid_size, double value) {
  return GridFunction(std::vector<double>(grid_size, value));
}

GridFunction operator+(const GridFunction& f, const GridFunction& g) {
  require_same_grid(f, g, "operator+");
  std::vector<double> out(f.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f[k] + g[k];
  return GridFunction(std::move(out));
}

GridFunction operator-(const GridFunction& f, const GridFunction& g) {
  require_same_grid(f, g, "operator-");
  std::vector<double> out(f.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f[k] - g[k];
  return GridFunction(std::move(out));
}

GridFunction operator*(double scale, const GridFunction& f) {
  std::vector<double> out(f.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = scale * f[k];
  return GridFunction(std::move(out));
}

GridFunction make_grid_function(const std::function<double(double)>& evaluator,
                                std::size_t grid_size) {
  if (grid_size < 2) {
    throw std::invalid_argument("make_grid_function: grid_size must be >= 2");
  }
  std::vector<double> values(grid_size);
  for (std::size_t k = 0; k < grid_size; ++k) {
    const double x = GridFunction::node(k, grid_size);
    values[k] = evaluator(x);
    if (!std::isfinite(values[k])) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "make_grid_function: evaluator returned " << values[k]
          << " at x_" << k << " = " << x;
      throw std::invalid_argument(msg.str());
    }
  }
  return GridFunction(std::move(values));
}

double l2_inner(const GridFunction& f, const GridFunction& g) {
  require_same_grid(f, g, "l2_inner");
  double sum = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) sum += f[k] * g[k];
  return sum / static_cast<double>(f.size());
}

double l2_norm_sq(const GridFunction& f) { return l2_inner(f, f); }

double normalized_error(double residual_sq, double target_norm_sq) {
  if (!(target_norm_sq > 0.0)) {
    throw std::invalid_argument(
        "normalized_error: target norm must be positive");
  }
  if (residual_sq < 0.0) {
    throw std::invalid_argument("normalized_error: negative residual");
  }
  return residual_sq / target_norm_sq;
}

double three_bump(double x) {
  const auto bump = [](double s) { return std::exp(-s * s); };
  return 0.2 * bump(10.0 * x - 4.0) + 0.5 * bump(80.0 * x - 40.0) +
         0.3 * bump(80.0 * x - 20.0);
}

}  // namespace randbasis
