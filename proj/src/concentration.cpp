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

#include "randbasis/concentration.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

namespace randbasis {
namespace {

constexpr double kPi = std::numbers::pi;

void require_dimension(std::size_t n, const char* fn) {
  if (n < 1) throw std::domain_error(std::string(fn) + ": n must be >= 1");
}

void require_open_unit(double x, const char* fn, const char* name) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error(std::string(fn) + ": " + name +
                            " must lie in (0, 1), got " + std::to_string(x));
  }
}

double log_sum_exp(double a, double b) {
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

}  // namespace

void BoundQuery::validate() const {
  require_dimension(n, "BoundQuery");
  require_open_unit(eps, "BoundQuery", "eps");
  require_open_unit(theta, "BoundQuery", "theta");
}

std::size_t SubspaceQuery::k() const {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw std::domain_error("SubspaceQuery: lambda must lie in (0, 1)");
  }
  if (!(eps_geo > 0.0 && eps_geo < kPi / 2)) {
    throw std::domain_error("SubspaceQuery: eps_geo must lie in (0, pi/2)");
  }
  const double kk = std::round(lambda * static_cast<double>(n));
  if (kk < 1.0 || kk >= static_cast<double>(n)) {
    throw std::domain_error("SubspaceQuery: round(lambda*n) = " +
                            std::to_string(static_cast<long long>(kk)) +
                            " is outside [1, n)");
  }
  return static_cast<std::size_t>(kk);
}

double shell_fraction_exact_log_complement(std::size_t n, double x) {
  require_dimension(n, "shell_fraction_exact");
  require_open_unit(x, "shell_fraction_exact", "delta_over_r");
  return static_cast<double>(n) * std::log1p(-x);
}

double shell_fraction_exact(std::size_t n, double x) {
  return -std::expm1(shell_fraction_exact_log_complement(n, x));
}

double shell_fraction_lower_bound_log_complement(std::size_t n, double x) {
  require_dimension(n, "shell_fraction_lower_bound");
  require_open_unit(x, "shell_fraction_lower_bound", "delta_over_r");
  return -static_cast<double>(n) * x;
}

double shell_fraction_lower_bound(std::size_t n, double x) {
  return -std::expm1(shell_fraction_lower_bound_log_complement(n, x));
}

ExpInequality exp_inequality_check(double x) {
  require_open_unit(x, "exp_inequality_check", "x");
  const double inv_e = std::exp(-1.0);
  ExpInequality out{(1.0 - x) * inv_e, std::exp(std::log1p(-x) / x), inv_e};
  if (!out.strictly_ordered()) {
    throw std::logic_error("exp_inequality_check: ordering violated at x = " +
                           std::to_string(x));
  }
  return out;
}

double waist_fraction_bound(std::size_t n, double x) {
  require_dimension(n, "waist_fraction_bound");
  require_open_unit(x, "waist_fraction_bound", "delta_over_r");
  return std::exp(-0.5 * static_cast<double>(n) * x * x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: x must be positive");
  return boost::math::lgamma(x);
}

double ball_volume_log(std::size_t n, double r) {
  require_dimension(n, "ball_volume_log");
  if (!(r > 0.0)) throw std::domain_error("ball_volume_log: r must be > 0");
  const double nd = static_cast<double>(n);
  return 0.5 * nd * std::log(kPi) - log_gamma(0.5 * nd + 1.0) +
         nd * std::log(r);
}

bool StirlingEstimate::within_bound() const {
  return std::abs(remainder) <= remainder_bound;
}

StirlingEstimate stirling_gamma_with_bound(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("stirling_gamma_with_bound: x must be positive");
  }
  const double log_core =
      (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * kPi);
  const double correction = 1.0 + 1.0 / (12.0 * x);
  StirlingEstimate out;
  out.log_value = log_core + std::log(correction);
  out.value = std::exp(out.log_value);
  out.remainder_bound =
      (1.0 + kPi * kPi / 6.0) / (2.0 * kPi * kPi * kPi * x * x);
  out.remainder = std::exp(log_gamma(x) - log_core) - correction;
  return out;
}

double pairwise_orthogonality_probability(std::size_t n, double eps,
                                          std::size_t count) {
  require_dimension(n, "pairwise_orthogonality_probability");
  require_open_unit(eps, "pairwise_orthogonality_probability", "eps");
  const double r = std::exp(-0.5 * static_cast<double>(n) * eps * eps);
  double log_p = 0.0;
  for (std::size_t k = 1; k <= count; ++k) {
    const double kr = static_cast<double>(k) * r;
    if (!(kr < 1.0)) {
      throw std::domain_error(
          "pairwise_orthogonality_probability: factor k = " +
          std::to_string(k) + " is not positive (k e^{-n eps^2/2} >= 1)");
    }
    log_p += std::log1p(-kr);
  }
  return std::exp(log_p);
}

double pairwise_orthogonality_lower_bound(std::size_t n, double eps,
                                          std::size_t count) {
  require_dimension(n, "pairwise_orthogonality_lower_bound");
  require_open_unit(eps, "pairwise_orthogonality_lower_bound", "eps");
  const double nr = static_cast<double>(count) *
                    std::exp(-0.5 * static_cast<double>(n) * eps * eps);
  if (!(nr < 1.0)) {
    throw std::domain_error(
        "pairwise_orthogonality_lower_bound: N e^{-n eps^2/2} >= 1");
  }
  return std::exp(static_cast<double>(count) * std::log1p(-nr));
}

double log_quasiortho_bound_conservative(const BoundQuery& q) {
  q.validate();
  const double l = -std::log1p(-q.theta);  // log(1 / (1 - theta))
  return 0.25 * q.eps * q.eps * static_cast<double>(q.n) + 0.5 * std::log(l);
}

double quasiortho_bound_conservative(const BoundQuery& q) {
  return std::exp(log_quasiortho_bound_conservative(q));
}

// With L = log(1/(1-theta)) and z = n eps^2 / 2 the bound is
//   sqrt(L^2/4 + 2 L e^z) - L/2 = 2 L e^z / (sqrt(L^2/4 + 2 L e^z) + L/2),
// which avoids cancellation and stays finite in log space.
double log_quasiortho_bound_refined(const BoundQuery& q) {
  q.validate();
  const double l = -std::log1p(-q.theta);
  const double z = 0.5 * static_cast<double>(q.n) * q.eps * q.eps;
  const double log_num = std::log(2.0 * l) + z;
  const double log_root = 0.5 * log_sum_exp(2.0 * std::log(0.5 * l), log_num);
  return log_num - log_sum_exp(log_root, std::log(0.5 * l));
}

double quasiortho_bound_refined(const BoundQuery& q) {
  return std::exp(log_quasiortho_bound_refined(q));
}

double min_gain(const Eigen::MatrixXd& h) {
  if (h.size() == 0) throw std::invalid_argument("min_gain: empty matrix");
  if (!h.allFinite()) {
    throw std::invalid_argument("min_gain: non-finite entry");
  }
  if (h.cols() > h.rows()) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(h);
  return svd.singularValues()(h.cols() - 1);
}

Eigen::VectorXd sample_unit_sphere(std::size_t dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("sample_unit_sphere: dim >= 1");
  Eigen::VectorXd x(static_cast<Eigen::Index>(dim));
  double norm_sq = 0.0;
  do {
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = rng.normal();
    norm_sq = x.squaredNorm();
  } while (!(norm_sq > 0.0));
  return x / std::sqrt(norm_sq);
}

double almost_independence_fraction(const Eigen::MatrixXd& h, double eps,
                                    std::size_t samples, Rng& rng) {
  if (h.size() == 0) {
    throw std::invalid_argument("almost_independence_fraction: empty matrix");
  }
  if (samples < 1) {
    throw std::invalid_argument(
        "almost_independence_fraction: samples must be >= 1");
  }
  const auto m = static_cast<std::size_t>(h.cols());
  std::size_t hits = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const Eigen::VectorXd x = sample_unit_sphere(m, rng);
    if ((h * x).norm() >= eps) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(samples);
}

double artstein_u(double lambda, double eps_geo) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw std::domain_error("artstein_u: lambda must lie in (0, 1)");
  }
  if (!(eps_geo > 0.0 && eps_geo < kPi / 2)) {
    throw std::domain_error("artstein_u: eps_geo must lie in (0, pi/2)");
  }
  const double s2 = std::sin(eps_geo) * std::sin(eps_geo);
  const double c2 = std::cos(eps_geo) * std::cos(eps_geo);
  if (std::abs(s2 - (1.0 - lambda)) <= 1e-12) {
    throw std::domain_error(
        "artstein_u: sin^2(eps) = 1 - lambda, asymptotic regime undefined");
  }
  return (1.0 - lambda) * std::log((1.0 - lambda) / s2) +
         lambda * std::log(lambda / c2);
}

SubspaceAsymptotics subspace_neighborhood_asymptotic(const SubspaceQuery& q) {
  q.k();
  const double n = static_cast<double>(q.n);
  const double s2 = std::sin(q.eps_geo) * std::sin(q.eps_geo);
  const double gap = s2 - (1.0 - q.lambda);
  SubspaceAsymptotics out;
  out.u = artstein_u(q.lambda, q.eps_geo);
  out.large_angle = gap > 0.0;
  out.prefactor = std::sqrt(q.lambda * (1.0 - q.lambda)) /
                  (std::sqrt(n * kPi) * std::abs(gap));
  const double grow = std::exp(0.5 * n * out.u);
  const double decay = std::exp(-0.5 * n * out.u);
  if (out.large_angle) {
    out.estimate = 1.0 - out.prefactor * grow;
    out.damped = 1.0 - out.prefactor * decay;
  } else {
    out.estimate = out.prefactor;
    out.damped = out.prefactor * decay;
  }
  return out;
}

double subspace_neighborhood_mc(const SubspaceQuery& q, std::size_t samples,
                                Rng& rng) {
  const std::size_t k = q.k();
  if (samples < 1) {
    throw std::invalid_argument(
        "subspace_neighborhood_mc: samples must be >= 1");
  }
  const double c = std::cos(q.eps_geo);
  const double c2 = c * c;
  std::size_t hits = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const Eigen::VectorXd x = sample_unit_sphere(q.n, rng);
    if (x.head(static_cast<Eigen::Index>(k)).squaredNorm() >= c2) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(samples);
}

}  // namespace randbasis
