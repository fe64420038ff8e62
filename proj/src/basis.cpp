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

#include "randbasis/basis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace randbasis {

double Gaussian::operator()(double x) const {
  const double s = w * x + b;
  return std::exp(-s * s);
}

Indicator::Indicator(double center, double width)
    : center_(center), width_(width) {
  if (!(center >= 0.0 && center <= 1.0) || !(width >= 0.0 && width <= 1.0)) {
    std::ostringstream msg;
    msg << "Indicator: center and width must lie in [0, 1], got (" << center
        << ", " << width << ")";
    throw std::invalid_argument(msg.str());
  }
}

double Indicator::operator()(double x) const {
  const double half = 0.5 * width_;
  return (x >= center_ - half && x <= center_ + half) ? 1.0 : 0.0;
}

double evaluate(const BasisElement& e, double x) {
  return std::visit([x](const auto& element) { return element(x); }, e);
}

GridFunction eval_basis(const BasisElement& e, std::size_t grid_size) {
  return std::visit(
      [grid_size](const auto& element) {
        return make_grid_function(element, grid_size);
      },
      e);
}

std::string describe(const BasisElement& e) {
  std::ostringstream out;
  out.precision(17);
  if (const auto* g = std::get_if<Gaussian>(&e)) {
    out << "gaussian(w=" << g->w << ", b=" << g->b << ")";
  } else {
    const auto& ind = std::get<Indicator>(e);
    out << "indicator(a=" << ind.center() << ", sigma=" << ind.width() << ")";
  }
  return out.str();
}

}  // namespace randbasis
