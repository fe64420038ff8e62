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
#include <limits>

#include <gtest/gtest.h>

namespace randbasis {
namespace {

TEST(GridFunctionTest, MidpointNodes) {
  EXPECT_DOUBLE_EQ(GridFunction::node(0, 4), 0.125);
  EXPECT_DOUBLE_EQ(GridFunction::node(3, 4), 0.875);
  EXPECT_DOUBLE_EQ(GridFunction::node(499, 1000), 0.4995);
}

TEST(GridFunctionTest, RejectsTinyOrNonFinite) {
  EXPECT_THROW(GridFunction({1.0}), std::invalid_argument);
  EXPECT_THROW(GridFunction({1.0, std::nan("")}), std::invalid_argument);
  try {
    make_grid_function([](double x) { return 1.0 / (x - 0.375); }, 4);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("0.375"), std::string::npos)
        << e.what();
  }
}

TEST(GridFunctionTest, InnerProductIsMidpointRule) {
  const auto x = make_grid_function([](double t) { return t; }, 1000);
  // Midpoint rule on x^2: 1/3 - h^2/12.
  EXPECT_NEAR(l2_norm_sq(x), 1.0 / 3.0 - 1e-6 / 12.0, 1e-15);
  const auto one = GridFunction::constant(1000, 1.0);
  EXPECT_NEAR(l2_inner(x, one), 0.5, 1e-15);
  EXPECT_THROW(l2_inner(x, GridFunction::constant(10, 1.0)),
               std::invalid_argument);
}

TEST(GridFunctionTest, Arithmetic) {
  const GridFunction f({1.0, 2.0, 3.0});
  const GridFunction g({0.5, 0.5, 0.5});
  EXPECT_EQ(f - g, GridFunction({0.5, 1.5, 2.5}));
  EXPECT_EQ(f + g, GridFunction({1.5, 2.5, 3.5}));
  EXPECT_EQ(2.0 * g, GridFunction({1.0, 1.0, 1.0}));
}

TEST(GridFunctionTest, NormalizedError) {
  EXPECT_DOUBLE_EQ(normalized_error(0.25, 0.5), 0.5);
  EXPECT_THROW(normalized_error(1.0, 0.0), std::invalid_argument);
}

TEST(GridFunctionTest, ThreeBumpPeaks) {
  // Values at the three bump centres.
  EXPECT_NEAR(three_bump(0.5), 0.2 * std::exp(-1.0) + 0.5 +
                                   0.3 * std::exp(-400.0), 1e-15);
  EXPECT_NEAR(three_bump(0.25), 0.2 * std::exp(-2.25) + 0.5 * std::exp(-400.0) +
                                    0.3, 1e-15);
  EXPECT_NEAR(three_bump(0.4), 0.2 + 0.5 * std::exp(-64.0) +
                                   0.3 * std::exp(-144.0), 1e-15);
}

}  // namespace
}  // namespace randbasis
