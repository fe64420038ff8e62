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

// Measure-concentration toolkit: ball shell and waist fractions, ball
// volumes and Stirling remainders, quasi-orthogonality probabilities and
// capacity bounds, and Monte-Carlo estimators on the unit sphere.
//
// Every closed form is evaluated in log space so that dimensions in the
// millions neither overflow nor lose the small tails.

#pragma once

#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "randbasis/philox.hpp"

namespace randbasis {

// (n, eps, theta): dimension, |cos| tolerance, failure probability.
struct BoundQuery {
  std::size_t n = 1;
  double eps = 0.1;
  double theta = 0.1;

  void validate() const;
};

// (n, lambda, eps_geo); the subspace dimension is k = round(lambda * n).
struct SubspaceQuery {
  std::size_t n = 2;
  double lambda = 0.5;
  double eps_geo = 0.5;

  // Throws unless 1 <= k < n and 0 < eps_geo < pi/2.
  std::size_t k() const;
};

// 1 - (1 - x)^n: fraction of the n-ball volume within x = delta/R of the
// surface. Throws unless n >= 1 and 0 < x < 1.
double shell_fraction_exact(std::size_t n, double delta_over_r);
// log of the complement, n log(1 - x).
double shell_fraction_exact_log_complement(std::size_t n, double delta_over_r);

// 1 - e^{-n x}, strictly below shell_fraction_exact.
double shell_fraction_lower_bound(std::size_t n, double delta_over_r);
double shell_fraction_lower_bound_log_complement(std::size_t n,
                                                 double delta_over_r);

struct ExpInequality {
  double lower;   // (1 - x) / e
  double middle;  // (1 - x)^{1/x}
  double upper;   // 1 / e

  bool strictly_ordered() const { return lower < middle && middle < upper; }
};

// Throws std::domain_error unless 0 < x < 1.
ExpInequality exp_inequality_check(double x);

// e^{-n x^2 / 2}: upper bound on the ball volume fraction outside the
// x-thickened equatorial disc.
double waist_fraction_bound(std::size_t n, double delta_over_r);

// log V_n(r) = (n/2) log pi - log Gamma(n/2 + 1) + n log r.
double ball_volume_log(std::size_t n, double r);

// Natural log of Gamma, backed by Boost.Math.
double log_gamma(double x);

struct StirlingEstimate {
  // log of x^{x-1/2} e^{-x} sqrt(2 pi) (1 + 1/(12x)).
  double log_value = 0.0;
  // exp(log_value); +inf past the double range.
  double value = 0.0;
  // (1 + pi^2/6) / (2 pi^3 x^2)
  double remainder_bound = 0.0;
  // Gamma(x) / (x^{x-1/2} e^{-x} sqrt(2 pi)) - (1 + 1/(12x)).
  double remainder = 0.0;

  bool within_bound() const;
};

// Throws std::domain_error for x <= 0.
StirlingEstimate stirling_gamma_with_bound(double x);

// prod_{k=1}^{N} (1 - k e^{-n eps^2 / 2}). Throws std::domain_error naming
// the first k whose factor is not positive.
double pairwise_orthogonality_probability(std::size_t n, double eps,
                                          std::size_t count);

// (1 - N r)^N with r = e^{-n eps^2 / 2}; the product lower bound. Throws when
// N r >= 1.
double pairwise_orthogonality_lower_bound(std::size_t n, double eps,
                                          std::size_t count);

// e^{eps^2 n / 4} sqrt(log(1 / (1 - theta)))
double quasiortho_bound_conservative(const BoundQuery& q);
double log_quasiortho_bound_conservative(const BoundQuery& q);

// sqrt(log^2(1-theta)/4 + 2 log(1/(1-theta)) e^{n eps^2/2}) + log(1-theta)/2
double quasiortho_bound_refined(const BoundQuery& q);
double log_quasiortho_bound_refined(const BoundQuery& q);

// Smallest singular value of H, i.e. min over unit x of ||H x||. Zero when
// H has more columns than rows. Throws for an empty matrix.
double min_gain(const Eigen::MatrixXd& h);

// Uniform point on the unit sphere in `dim` dimensions (normalized
// Gaussian).
Eigen::VectorXd sample_unit_sphere(std::size_t dim, Rng& rng);

// Fraction of `samples` uniform unit x with ||H x|| >= eps.
double almost_independence_fraction(const Eigen::MatrixXd& h, double eps,
                                    std::size_t samples, Rng& rng);

// (1 - l) log((1 - l) / sin^2 e) + l log(l / cos^2 e). Throws
// std::domain_error on the boundary sin^2 e = 1 - l.
double artstein_u(double lambda, double eps_geo);

// Asymptotic measure of the eps-neighbourhood of a lambda*n dimensional
// subspace, with p the prefactor. `estimate` is 1 - p e^{(n/2)u} in the
// large-angle regime (sin^2 eps > 1 - lambda) and p otherwise. `damped`
// carries e^{-(n/2)u} instead: 1 - p e^{-(n/2)u}, or p e^{-(n/2)u}. The
// first diverges where the measure tends to 1, so both are reported.
struct SubspaceAsymptotics {
  bool large_angle = false;
  double prefactor = 0.0;
  double u = 0.0;
  double estimate = 0.0;
  double damped = 0.0;
};

SubspaceAsymptotics subspace_neighborhood_asymptotic(const SubspaceQuery& q);

// Fraction of uniform unit vectors whose angle to span(e_1..e_k) is below
// eps_geo, i.e. whose first-k block has norm >= cos(eps_geo).
double subspace_neighborhood_mc(const SubspaceQuery& q, std::size_t samples,
                                Rng& rng);

}  // namespace randbasis
