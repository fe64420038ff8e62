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

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include "oracles/oracles.hpp"

namespace randbasis {
namespace {

using oracle::Big;
constexpr double kPi = std::numbers::pi;

TEST(ShellTest, ExactValues) {
  EXPECT_DOUBLE_EQ(shell_fraction_exact(1, 0.5), 0.5);
  // 1 - 0.99^100 in 50 digits, frozen.
  const Big ref = 1 - pow(Big("0.99"), 100);
  EXPECT_NEAR(static_cast<double>(ref), 0.63396765872677049, 1e-16);
  EXPECT_NEAR(shell_fraction_exact(100, 0.01), 0.63396765872677049, 1e-15);
  EXPECT_NEAR(shell_fraction_exact(5, 1.0 - 1e-12), 1.0, 1e-15);
  // Small x: log1p form keeps full relative precision.
  EXPECT_NEAR(shell_fraction_exact(1, 1e-17) / 1e-17, 1.0, 1e-15);
}

TEST(ShellTest, LowerBound) {
  EXPECT_NEAR(shell_fraction_lower_bound(100, 0.01), 0.63212055882855768,
              1e-15);
  EXPECT_LT(shell_fraction_lower_bound(100, 0.01),
            shell_fraction_exact(100, 0.01));
  EXPECT_NEAR(shell_fraction_lower_bound(1, 1e-12), 1e-12, 1e-24);
}

TEST(ShellTest, DomainErrors) {
  EXPECT_THROW(shell_fraction_exact(0, 0.5), std::domain_error);
  EXPECT_THROW(shell_fraction_exact(3, 0.0), std::domain_error);
  EXPECT_THROW(shell_fraction_lower_bound(3, 1.0), std::domain_error);
  EXPECT_THROW(waist_fraction_bound(3, -0.1), std::domain_error);
}

TEST(ExpInequalityTest, Values) {
  const ExpInequality e = exp_inequality_check(0.5);
  EXPECT_NEAR(e.lower, 0.18393972058572116, 1e-16);
  EXPECT_DOUBLE_EQ(e.middle, 0.25);
  EXPECT_NEAR(e.upper, 0.36787944117144233, 1e-16);
  EXPECT_TRUE(exp_inequality_check(0.9).strictly_ordered());
  const ExpInequality small = exp_inequality_check(1e-6);
  EXPECT_NEAR(small.middle, small.upper, 1e-6);
  EXPECT_THROW(exp_inequality_check(1.0), std::domain_error);
  EXPECT_THROW(exp_inequality_check(0.0), std::domain_error);
}

TEST(WaistTest, Values) {
  EXPECT_NEAR(waist_fraction_bound(1920, 0.1), 6.7728736490853873e-5, 1e-18);
  EXPECT_NEAR(waist_fraction_bound(10, 1e-9), 1.0, 1e-15);
  double last = 1.0;
  for (std::size_t n = 1; n < 1000; n += 37) {
    const double w = waist_fraction_bound(n, 0.2);
    EXPECT_LT(w, last);
    last = w;
  }
}

TEST(BallVolumeTest, LowDimensions) {
  EXPECT_NEAR(ball_volume_log(2, 1.0), std::log(kPi), 1e-15);
  EXPECT_NEAR(ball_volume_log(3, 1.0), std::log(4.0 * kPi / 3.0), 1e-15);
  EXPECT_NEAR(ball_volume_log(1, 2.5), std::log(5.0), 1e-15);
  EXPECT_THROW(ball_volume_log(2, 0.0), std::domain_error);
}

TEST(BallVolumeTest, LogGammaAgainstFactorials) {
  Big fact = 1;
  for (int k = 1; k <= 170; ++k) {
    fact *= k;
    const double ref = static_cast<double>(log(fact));
    EXPECT_NEAR(log_gamma(k + 1.0), ref, 1e-12 * std::max(1.0, ref)) << k;
  }
  EXPECT_NEAR(log_gamma(0.5), 0.5 * std::log(kPi), 1e-15);
}

TEST(BallVolumeTest, RecurrencesInLogForm) {
  for (std::size_t n = 3; n <= 10000; n += (n < 100 ? 1 : 97)) {
    for (double r : {0.5, 1.0, 3.0}) {
      const double two_step = std::log(2.0 * kPi * r * r / n) +
                              ball_volume_log(n - 2, r);
      EXPECT_NEAR(ball_volume_log(n, r), two_step, 1e-10) << n;
      const double nd = static_cast<double>(n);
      const double one_step = std::log(r * std::sqrt(kPi)) +
                              log_gamma((nd + 1) / 2) - log_gamma(nd / 2 + 1) +
                              ball_volume_log(n - 1, r);
      EXPECT_NEAR(ball_volume_log(n, r), one_step, 1e-10) << n;
    }
  }
}

TEST(StirlingTest, BoundValueAndFactorial) {
  const StirlingEstimate s10 = stirling_gamma_with_bound(10.0);
  EXPECT_NEAR(s10.remainder_bound, 4.2651591065248967e-4, 1e-18);
  const StirlingEstimate s5 = stirling_gamma_with_bound(5.0);
  // Gamma(5) = 24 against the oracle remainder 1.17319e-4.
  const Big x = 5;
  const Big core = pow(x, x - Big("0.5")) * exp(-x) *
                   sqrt(2 * boost::math::constants::pi<Big>());
  const double rem = static_cast<double>(24 / core - (1 + 1 / (12 * x)));
  EXPECT_NEAR(rem, 1.1731916114163911e-4, 1e-16);
  EXPECT_NEAR(s5.remainder, rem, 1e-13);
  EXPECT_TRUE(s5.within_bound());
  EXPECT_NEAR(s5.value, 24.0 * (1 + 1.0 / 60) / (1 + 1.0 / 60 + rem), 1e-12);
  EXPECT_LT(stirling_gamma_with_bound(1e6).remainder_bound, 1e-12);
  EXPECT_THROW(stirling_gamma_with_bound(0.0), std::domain_error);
}

TEST(PairwiseTest, ProductValues) {
  EXPECT_EQ(pairwise_orthogonality_probability(1000, 0.1, 0), 1.0);
  const double r = std::exp(-5.0);
  EXPECT_NEAR(pairwise_orthogonality_probability(1000, 0.1, 3),
              (1 - r) * (1 - 2 * r) * (1 - 3 * r), 1e-15);
  EXPECT_NEAR(pairwise_orthogonality_probability(1000, 0.1, 3),
              0.96006988181895152, 1e-15);
}

TEST(PairwiseTest, FailingFactorIsNamed) {
  // r = e^{-0.5}, so k = 2 is the first factor with k r >= 1.
  try {
    pairwise_orthogonality_probability(1, 1.0 - 1e-16, 5);
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("k = 2"), std::string::npos)
        << e.what();
  }
}

TEST(PairwiseTest, MonotoneAndAboveLowerBound) {
  for (std::size_t n : {1000, 2000, 3000}) {
    double last = 1.0;
    for (std::size_t count = 1; count < 50; ++count) {
      const double p = pairwise_orthogonality_probability(n, 0.1, count);
      EXPECT_LE(p, last);
      last = p;
      EXPECT_GE(p, pairwise_orthogonality_lower_bound(n, 0.1, count));
      EXPECT_GE(pairwise_orthogonality_probability(n + 100, 0.1, count), p);
    }
  }
}

Big big_conservative(int n, const char* eps, const char* theta) {
  const Big e(eps), t(theta);
  return exp(e * e * n / 4) * sqrt(log(1 / (1 - t)));
}

Big big_refined(int n, const char* eps, const char* theta) {
  const Big e(eps), t(theta);
  const Big l = log(1 - t);
  return sqrt(l * l / 4 + 2 * log(1 / (1 - t)) * exp(n * e * e / 2)) + l / 2;
}

TEST(QuasiOrthoTest, ReferenceQuery) {
  const BoundQuery q{1000, 0.1, 0.1};
  EXPECT_NEAR(static_cast<double>(big_conservative(1000, "0.1", "0.1")),
              3.9543503857719144, 1e-15);
  EXPECT_NEAR(static_cast<double>(big_refined(1000, "0.1", "0.1")),
              5.5398638105244063, 1e-15);
  EXPECT_NEAR(quasiortho_bound_conservative(q), 3.9543503857719144, 1e-13);
  EXPECT_NEAR(quasiortho_bound_refined(q), 5.5398638105244063, 1e-13);
}

TEST(QuasiOrthoTest, AgreesWithOracleOverGrid) {
  for (int n : {1, 10, 100, 1000, 5000}) {
    for (const char* eps : {"0.05", "0.1", "0.3"}) {
      for (const char* theta : {"0.001", "0.1", "0.9"}) {
        const BoundQuery q{static_cast<std::size_t>(n), std::stod(eps),
                           std::stod(theta)};
        const double c = static_cast<double>(big_conservative(n, eps, theta));
        const double r = static_cast<double>(big_refined(n, eps, theta));
        EXPECT_NEAR(quasiortho_bound_conservative(q) / c, 1.0, 1e-12);
        EXPECT_NEAR(quasiortho_bound_refined(q) / r, 1.0, 1e-12);
      }
    }
  }
}

TEST(QuasiOrthoTest, LimitsAndHugeDimensions) {
  EXPECT_LT(quasiortho_bound_conservative({1000, 0.1, 1e-12}), 1e-4);
  EXPECT_LT(quasiortho_bound_refined({1000, 0.1, 1e-12}), 1e-4);
  const BoundQuery small{1, 0.1, 0.1};
  EXPECT_NEAR(quasiortho_bound_conservative(small),
              std::sqrt(std::log(1 / 0.9)) * std::exp(0.0025), 1e-15);
  EXPECT_THROW(quasiortho_bound_conservative({0, 0.1, 0.1}), std::domain_error);
  EXPECT_THROW(quasiortho_bound_refined({10, 1.0, 0.1}), std::domain_error);
  const BoundQuery huge{10000000, 0.1, 0.1};
  EXPECT_TRUE(std::isfinite(log_quasiortho_bound_refined(huge)));
  EXPECT_NEAR(log_quasiortho_bound_refined(huge) -
                  log_quasiortho_bound_conservative(huge),
              0.5 * std::log(2.0), 1e-9);
}

TEST(QuasiOrthoTest, LogSlopeIsQuarterEpsSquared) {
  for (double eps : {0.05, 0.0581, 0.1}) {
    const std::size_t n1 = 200000, n2 = 400000;
    const double slope_c = (log_quasiortho_bound_conservative({n2, eps, 0.1}) -
                            log_quasiortho_bound_conservative({n1, eps, 0.1})) /
                           (n2 - n1);
    const double slope_r = (log_quasiortho_bound_refined({n2, eps, 0.1}) -
                            log_quasiortho_bound_refined({n1, eps, 0.1})) /
                           (n2 - n1);
    EXPECT_NEAR(slope_c, eps * eps / 4, 1e-6);
    EXPECT_NEAR(slope_r, eps * eps / 4, 1e-6);
  }
}

TEST(QuasiOrthoTest, RefinedAboveConservativeAtLargeN) {
  for (std::size_t n = 500; n <= 20000; n += 500) {
    const BoundQuery q{n, 0.1, 0.1};
    EXPECT_GE(quasiortho_bound_refined(q), quasiortho_bound_conservative(q));
  }
  const BoundQuery far{100000, 0.1, 0.1};
  EXPECT_NEAR(quasiortho_bound_refined(far) / quasiortho_bound_conservative(far),
              std::sqrt(2.0), 1e-9);
}

TEST(MinGainTest, Structure) {
  EXPECT_NEAR(min_gain(Eigen::MatrixXd::Identity(4, 3)), 1.0, 1e-15);
  Eigen::MatrixXd dup(3, 2);
  dup << 1, 1, 2, 2, 0, 0;
  EXPECT_NEAR(min_gain(dup), 0.0, 1e-15);
  Eigen::MatrixXd combo(4, 3);
  combo << 1, 0, 2, 0, 1, 3, 1, 1, 5, 2, 0, 4;
  EXPECT_NEAR(min_gain(combo), 0.0, 1e-14);
  EXPECT_EQ(min_gain(Eigen::MatrixXd::Ones(2, 3)), 0.0);
  EXPECT_THROW(min_gain(Eigen::MatrixXd()), std::invalid_argument);
}

TEST(MinGainTest, MatchesSphereSampling) {
  Rng rng(17);
  Eigen::MatrixXd h(5, 3);
  for (Eigen::Index i = 0; i < h.size(); ++i) h.data()[i] = rng.normal();
  double best = 1e300;
  for (int s = 0; s < 1000000; ++s) {
    best = std::min(best, (h * sample_unit_sphere(3, rng)).norm());
  }
  EXPECT_NEAR(min_gain(h), best, 1e-3);
  EXPECT_LE(min_gain(h), best);
}

TEST(AlmostIndependenceTest, Trivial) {
  Rng rng(1);
  EXPECT_EQ(almost_independence_fraction(Eigen::MatrixXd::Identity(5, 3), 0.5,
                                         1000, rng),
            1.0);
  Eigen::MatrixXd h(2, 2);
  h << 1, 0, 0, 2;
  EXPECT_EQ(almost_independence_fraction(h, 2.1, 1000, rng), 0.0);
}

TEST(AlmostIndependenceTest, DuplicatedColumnMatchesArcMeasure) {
  Eigen::MatrixXd h(3, 2);
  h.col(0) << 0.6, 0.0, 0.8;
  h.col(1) = h.col(0);
  const double ref = oracle::circle_measure(
      [](double c, double s) { return std::abs(c + s) >= 0.1; });
  EXPECT_NEAR(ref, 0.95494658635558790, 1e-6);  // 1 - (2/pi) asin(0.1/sqrt2)
  Rng rng(23);
  const std::size_t samples = 1000000;
  const double est = almost_independence_fraction(h, 0.1, samples, rng);
  const double se = std::sqrt(ref * (1 - ref) / samples);
  EXPECT_NEAR(est, ref, 3 * se);
}

TEST(SphereSamplingTest, UnitNormAndIsotropy) {
  Rng rng(2);
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(4);
  for (int s = 0; s < 100000; ++s) {
    const Eigen::VectorXd x = sample_unit_sphere(4, rng);
    ASSERT_NEAR(x.norm(), 1.0, 1e-15);
    mean += x;
  }
  EXPECT_LT((mean / 100000).cwiseAbs().maxCoeff(), 0.01);
}

TEST(ArtsteinTest, ValueAndSymmetry) {
  EXPECT_NEAR(artstein_u(0.5, 1.0), 0.095083036095160631, 1e-15);
  for (double lambda : {0.1, 0.3, 0.7}) {
    for (double eps : {0.2, 0.6, 1.3}) {
      if (std::abs(std::sin(eps) * std::sin(eps) - (1 - lambda)) < 1e-3) {
        continue;
      }
      EXPECT_NEAR(artstein_u(lambda, eps), artstein_u(1 - lambda, kPi / 2 - eps),
                  1e-12);
      EXPECT_GE(artstein_u(lambda, eps), 0.0);
    }
  }
}

TEST(ArtsteinTest, BoundaryThrows) {
  EXPECT_THROW(artstein_u(0.5, kPi / 4), std::domain_error);
  EXPECT_THROW(artstein_u(0.0, 0.5), std::domain_error);
  EXPECT_THROW(artstein_u(0.5, kPi / 2), std::domain_error);
}

TEST(ArtsteinTest, AsymptoticReportsBothSigns) {
  const SubspaceQuery large{400, 0.5, 1.2};
  const SubspaceAsymptotics a = subspace_neighborhood_asymptotic(large);
  EXPECT_TRUE(a.large_angle);
  EXPECT_GT(a.u, 0.0);
  EXPECT_LT(a.estimate, 0.0);  // 1 - (huge)
  EXPECT_NEAR(a.damped, 1.0, 1e-6);
  Rng rng(4);
  EXPECT_GT(subspace_neighborhood_mc(large, 2000, rng), 0.999);

  const SubspaceAsymptotics b =
      subspace_neighborhood_asymptotic({400, 0.5, 0.3});
  EXPECT_FALSE(b.large_angle);
  EXPECT_GT(b.estimate, 0.0);
  EXPECT_LT(b.damped, b.estimate);
}

TEST(SubspaceTest, QueryValidation) {
  EXPECT_EQ((SubspaceQuery{10, 0.3, 0.5}.k()), 3u);
  EXPECT_THROW((SubspaceQuery{10, 0.01, 0.5}.k()), std::domain_error);
  EXPECT_THROW((SubspaceQuery{3, 0.9, 0.5}.k()), std::domain_error);
  EXPECT_THROW((SubspaceQuery{10, 0.5, 2.0}.k()), std::domain_error);
}

TEST(SubspaceTest, BandMeasureOracle) {
  // k = n - 1 = 2, eps = pi/4: the hit set is |x_3| <= sin(pi/4).
  const double ref = oracle::coordinate_band_measure(3, std::sin(kPi / 4));
  EXPECT_NEAR(ref, 0.70710678118654752, 1e-12);
  Rng rng(31);
  const std::size_t samples = 400000;
  const double est =
      subspace_neighborhood_mc({3, 2.0 / 3.0, kPi / 4}, samples, rng);
  EXPECT_NEAR(est, ref, 3 * std::sqrt(ref * (1 - ref) / samples));
  // A higher-dimensional case against the same 1-D integral.
  const double ref10 = oracle::coordinate_band_measure(10, std::sin(0.4));
  const double est10 = subspace_neighborhood_mc({10, 0.9, 0.4}, samples, rng);
  EXPECT_NEAR(est10, ref10, 3 * std::sqrt(ref10 * (1 - ref10) / samples));
}

TEST(SubspaceTest, MonotoneInEpsilon) {
  double last = 0.0;
  for (double eps = 0.1; eps < kPi / 2; eps += 0.2) {
    Rng rng(9);  // common random numbers make the nesting exact
    const double f = subspace_neighborhood_mc({20, 0.5, eps}, 5000, rng);
    EXPECT_GE(f, last);
    last = f;
  }
  Rng rng(9);
  EXPECT_GT(subspace_neighborhood_mc({20, 0.5, kPi / 2 - 1e-9}, 5000, rng),
            0.999);
}

// Independent seeds agree within 4 standard errors.
TEST(MonteCarloTest, ReplicatesAgree) {
  const SubspaceQuery q{12, 0.5, 0.7};
  const std::size_t samples = 20000;
  int agree = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng a(1000 + s), b(2000 + s);
    const double fa = subspace_neighborhood_mc(q, samples, a);
    const double fb = subspace_neighborhood_mc(q, samples, b);
    const double p = 0.5 * (fa + fb);
    const double se = std::sqrt(2 * p * (1 - p) / samples);
    if (std::abs(fa - fb) <= 4 * se) ++agree;
  }
  EXPECT_GE(agree, 19);
}

}  // namespace
}  // namespace randbasis
