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

#include "randbasis/least_squares.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace randbasis {
namespace {

constexpr double kNegligibleFraction = 1e-4;

// Plain loops keep the summation order fixed regardless of alignment, which
// is what makes incremental and from-scratch factorizations bit-identical.
double dot(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

// Euclidean norm scaled by the largest entry, so columns holding subnormal
// Gaussian tails neither underflow to zero nor overflow on division.
// Applies H = I - tau * h h^T with h = (1, tail...) to v (length n).
void apply_reflector(const double* tail, double tau, double* v,
                     std::size_t n) {
  if (tau == 0.0) return;
  const double s = tau * (v[0] + dot(tail, v + 1, n - 1));
  v[0] -= s;
  for (std::size_t i = 1; i < n; ++i) v[i] -= s * tail[i - 1];
}

}  // namespace

GridFunction ApproxModel::evaluate(std::size_t grid_size) const {
  std::vector<double> values(grid_size, 0.0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const GridFunction g = eval_basis(basis[i], grid_size);
    for (std::size_t k = 0; k < grid_size; ++k) values[k] += coeffs[i] * g[k];
  }
  return GridFunction(std::move(values));
}

IncrementalLeastSquares::IncrementalLeastSquares(const GridFunction& target,
                                                 FitOptions options)
    : options_(options), rhs_(static_cast<Eigen::Index>(target.size())) {
  if (!(options_.rel_tol >= 0.0 && options_.rel_tol < 1.0)) {
    throw std::invalid_argument("FitOptions: rel_tol must lie in [0, 1)");
  }
  const double weight = std::sqrt(1.0 / static_cast<double>(target.size()));
  for (std::size_t k = 0; k < target.size(); ++k) {
    rhs_(static_cast<Eigen::Index>(k)) = weight * target[k];
  }
  factor_.resize(rhs_.size(), 0);
}

void IncrementalLeastSquares::reserve(std::size_t cols) {
  const auto have = static_cast<std::size_t>(factor_.cols());
  if (cols <= have) return;
  const std::size_t grown = std::max<std::size_t>(cols, 2 * have);
  factor_.conservativeResize(Eigen::NoChange, static_cast<Eigen::Index>(grown));
  tau_.conservativeResize(static_cast<Eigen::Index>(grown));
}

void IncrementalLeastSquares::append(const BasisElement& element) {
  append(eval_basis(element, rows()));
}

void IncrementalLeastSquares::append(const GridFunction& column) {
  const std::size_t m = rows();
  if (column.size() != m) {
    throw std::invalid_argument("IncrementalLeastSquares: column has " +
                                std::to_string(column.size()) +
                                " samples, target has " + std::to_string(m));
  }
  reserve(columns_ + 1);
  const std::size_t j = columns_;
  double* v = factor_.col(static_cast<Eigen::Index>(j)).data();
  const double weight = std::sqrt(1.0 / static_cast<double>(m));
  for (std::size_t k = 0; k < m; ++k) v[k] = weight * column[k];

  const std::size_t previous = std::min(j, m);
  for (std::size_t i = 0; i < previous; ++i) {
    const double* h = factor_.col(static_cast<Eigen::Index>(i)).data();
    apply_reflector(h + i + 1, tau_(static_cast<Eigen::Index>(i)), v + i,
                    m - i);
  }

  double tau = 0.0;
  if (j < m) {
    // Work on a power-of-two rescaling of v[j..m): exact, and it keeps the
    // reflector orthogonal when the entries are subnormal.
    double peak = 0.0;
    for (std::size_t k = j; k < m; ++k) peak = std::max(peak, std::abs(v[k]));
    if (peak > 0.0) {
      const int shift = -std::ilogb(peak);
      for (std::size_t k = j; k < m; ++k) v[k] = std::ldexp(v[k], shift);
      const double alpha = v[j];
      const double xnorm = std::sqrt(dot(v + j + 1, v + j + 1, m - j - 1));
      double head = alpha;
      if (xnorm != 0.0) {
        const double beta = -std::copysign(std::hypot(alpha, xnorm), alpha);
        tau = (beta - alpha) / beta;
        const double denom = alpha - beta;
        for (std::size_t k = j + 1; k < m; ++k) v[k] /= denom;
        head = beta;
      } else {
        for (std::size_t k = j + 1; k < m; ++k) v[k] = 0.0;
      }
      v[j] = std::ldexp(head, -shift);
    }
  }
  tau_(static_cast<Eigen::Index>(j)) = tau;
  ++columns_;
}

void IncrementalLeastSquares::pop_back() {
  if (columns_ == 0) {
    throw std::logic_error("IncrementalLeastSquares::pop_back on empty set");
  }
  --columns_;
}

FitResult IncrementalLeastSquares::solve() const {
  if (columns_ == 0) {
    throw std::invalid_argument("least squares: basis is empty");
  }
  const std::size_t m = rows();
  const std::size_t n = columns_;
  const std::size_t r = std::min(m, n);

  Eigen::VectorXd qtb = rhs_;
  for (std::size_t i = 0; i < r; ++i) {
    const double* h = factor_.col(static_cast<Eigen::Index>(i)).data();
    apply_reflector(h + i + 1, tau_(static_cast<Eigen::Index>(i)),
                    qtb.data() + i, m - i);
  }
  double tail = 0.0;
  for (std::size_t k = r; k < m; ++k) {
    tail += qtb(static_cast<Eigen::Index>(k)) * qtb(static_cast<Eigen::Index>(k));
  }

  const auto ri = static_cast<Eigen::Index>(r);
  const auto ni = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd upper =
      factor_.topLeftCorner(ri, ni).triangularView<Eigen::Upper>();
  const Eigen::VectorXd c = qtb.head(ri);

  // Rank-revealing reduction before the SVD. With R P = Q [T1; T2] from
  // column-pivoted QR, T2 is dropped once its diagonal falls to tau; its
  // norm is then at most sqrt(n) tau, a small fraction of the truncation
  // cutoff. The kept k x n block is compressed to a k x k triangle by a QR of
  // its transpose. BDCSVD is only ever run on that full-rank core: given the
  // exact zeros of a rank-deficient R it returns garbage.
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> pivoted(upper);
  const Eigen::MatrixXd& t = pivoted.matrixQR();
  const double tau = kNegligibleFraction * options_.rel_tol *
                     std::abs(t(0, 0)) / std::sqrt(static_cast<double>(n));
  Eigen::Index k = 0;
  while (k < ri && std::abs(t(k, k)) > tau) ++k;

  FitResult out;
  out.singular_values.assign(r, 0.0);
  if (k == 0) {
    out.coeffs.assign(n, 0.0);
    out.residual_sq = tail + c.squaredNorm();
    out.cond = std::numeric_limits<double>::infinity();
    return out;
  }

  const Eigen::MatrixXd kept = t.topRows(k).triangularView<Eigen::Upper>();
  const Eigen::MatrixXd spread = pivoted.colsPermutation() * kept.transpose();
  const Eigen::HouseholderQR<Eigen::MatrixXd> compress(spread);
  const Eigen::MatrixXd core = compress.matrixQR()
                                   .topRows(k)
                                   .triangularView<Eigen::Upper>()
                                   .transpose();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(core,
                                     Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  std::copy(sigma.data(), sigma.data() + k, out.singular_values.begin());

  const double sigma_max = sigma(0);
  Eigen::Index rank = 0;
  if (sigma_max > 0.0) {
    const double cutoff = options_.rel_tol * sigma_max;
    while (rank < k && sigma(rank) > 0.0 && sigma(rank) >= cutoff) ++rank;
  }
  out.rank = static_cast<std::size_t>(rank);

  // Both orthogonal factors are applied as reflector sequences; forming
  // them densely would cost O(n^3) on top of the SVD.
  const Eigen::VectorXd d = pivoted.householderQ().transpose() * c;
  const auto uk = svd.matrixU().leftCols(rank);
  const Eigen::VectorXd y = uk.transpose() * d.head(k);
  Eigen::VectorXd z = Eigen::VectorXd::Zero(ni);
  z.head(k) = svd.matrixV().leftCols(rank) *
              (y.array() / sigma.head(rank).array()).matrix();
  const Eigen::VectorXd x = compress.householderQ() * z;
  const double lost = (d.head(k) - uk * y).squaredNorm() +
                      d.tail(ri - k).squaredNorm();

  out.coeffs.assign(x.data(), x.data() + x.size());
  out.residual_sq = tail + lost;
  out.cond = static_cast<std::size_t>(rank) == n
                 ? sigma_max / sigma(rank - 1)
                 : std::numeric_limits<double>::infinity();
  return out;
}

ApproxModel least_squares_fit(std::span<const BasisElement> basis,
                              const GridFunction& target, FitOptions options) {
  if (basis.empty()) {
    throw std::invalid_argument("least_squares_fit: basis is empty");
  }
  IncrementalLeastSquares solver(target, options);
  for (const auto& e : basis) solver.append(e);
  FitResult fit = solver.solve();

  ApproxModel model;
  model.basis.assign(basis.begin(), basis.end());
  model.coeffs = std::move(fit.coeffs);
  model.residual_sq = fit.residual_sq;
  model.cond = fit.cond;
  model.rank = fit.rank;
  return model;
}

}  // namespace randbasis
