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
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "randbasis/basis.hpp"
#include "randbasis/grid_function.hpp"

namespace randbasis {

// A linear combination of basis elements together with fit diagnostics.
// `cond` is unset for models that were not produced by a least-squares fit.
struct ApproxModel {
  std::vector<BasisElement> basis;
  std::vector<double> coeffs;
  double residual_sq = 0.0;
  std::optional<double> cond;
  std::size_t rank = 0;

  GridFunction evaluate(std::size_t grid_size) const;
};

struct FitOptions {
  // Singular values below rel_tol * sigma_max are treated as zero.
  double rel_tol = 1e-12;
};

struct FitResult {
  std::vector<double> coeffs;
  double residual_sq = 0.0;
  // sigma_max / sigma_min when every column is retained, +inf otherwise.
  double cond = 0.0;
  std::size_t rank = 0;
  std::vector<double> singular_values;
};

// Least squares over a growing set of sampled columns.
//
// Columns are scaled by the square root of the quadrature weight and
// factored with left-looking Householder QR, so appending a column costs
// O(rows * columns) and yields exactly the bits a from-scratch factorization
// of the same columns would. solve() compresses the triangular factor to
// its numerically full-rank core with pivoted QR, takes the SVD of that core,
// truncates at rel_tol and returns the minimum-norm minimizer.
class IncrementalLeastSquares {
 public:
  explicit IncrementalLeastSquares(const GridFunction& target,
                                   FitOptions options = {});

  void append(const BasisElement& element);
  void append(const GridFunction& column);
  void pop_back();

  std::size_t columns() const { return columns_; }
  std::size_t rows() const { return static_cast<std::size_t>(rhs_.size()); }

  // Throws std::invalid_argument when no column has been appended.
  FitResult solve() const;

 private:
  void reserve(std::size_t cols);

  FitOptions options_;
  Eigen::VectorXd rhs_;
  // Householder vectors below the diagonal, R on and above it.
  Eigen::MatrixXd factor_;
  Eigen::VectorXd tau_;
  std::size_t columns_ = 0;
};

// Throws std::invalid_argument for an empty basis.
ApproxModel least_squares_fit(std::span<const BasisElement> basis,
                              const GridFunction& target,
                              FitOptions options = {});

}  // namespace randbasis
