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

#include "randbasis/random_basis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace randbasis {
namespace {

constexpr double kNoFit = std::numeric_limits<double>::quiet_NaN();

void require_interval(const Interval& iv, const char* name) {
  if (!(std::isfinite(iv.lo) && std::isfinite(iv.hi) && iv.lo <= iv.hi)) {
    throw std::invalid_argument(std::string("RandomBasisConfig: invalid ") +
                                name);
  }
}

}  // namespace

Family parse_family(const std::string& name) {
  if (name == "gaussian") return Family::kGaussian;
  if (name == "indicator") return Family::kIndicator;
  throw std::invalid_argument("unknown family '" + name +
                              "' (expected gaussian or indicator)");
}

std::string to_string(Family family) {
  return family == Family::kGaussian ? "gaussian" : "indicator";
}

void RandomBasisConfig::validate() const {
  if (n_steps < 1) {
    throw std::invalid_argument("RandomBasisConfig: n_steps must be >= 1");
  }
  if (grid_size < 2) {
    throw std::invalid_argument("RandomBasisConfig: grid_size must be >= 2");
  }
  if (cond_limit && !(*cond_limit > 0.0)) {
    throw std::invalid_argument("RandomBasisConfig: cond_limit must be > 0");
  }
  if (family == Family::kGaussian) {
    require_interval(w_range, "w_range");
    require_interval(b_range, "b_range");
  } else {
    require_interval(a_range, "a_range");
    require_interval(sigma_range, "sigma_range");
    if (a_range.lo < 0.0 || a_range.hi > 1.0 || sigma_range.lo < 0.0 ||
        sigma_range.hi > 1.0) {
      throw std::invalid_argument(
          "RandomBasisConfig: indicator ranges must lie within [0, 1]");
    }
  }
}

BasisElement draw_basis_element(const RandomBasisConfig& cfg, Rng& rng) {
  if (cfg.family == Family::kGaussian) {
    const double w = rng.uniform(cfg.w_range.lo, cfg.w_range.hi);
    const double b = rng.uniform(cfg.b_range.lo, cfg.b_range.hi);
    return Gaussian{w, b};
  }
  const double a = rng.uniform(cfg.a_range.lo, cfg.a_range.hi);
  const double sigma = rng.uniform(cfg.sigma_range.lo, cfg.sigma_range.hi);
  return Indicator(a, sigma);
}

StepResult rvfl_step(const ApproxModel& previous, const BasisElement& element,
                     const GridFunction& target,
                     std::optional<double> cond_limit, FitOptions options) {
  std::vector<BasisElement> basis = previous.basis;
  basis.push_back(element);
  ApproxModel next = least_squares_fit(basis, target, options);
  if (cond_limit && next.cond && *next.cond > *cond_limit) {
    return {previous, true};
  }
  return {std::move(next), false};
}

namespace {

using StepObserver =
    std::function<void(std::size_t step, const ApproxModel& model)>;

RandomBasisRun run_loop(const GridFunction& target,
                        const RandomBasisConfig& cfg,
                        const StepObserver& observe) {
  cfg.validate();
  if (target.size() != cfg.grid_size) {
    throw std::invalid_argument(
        "run_random_basis: target grid does not match cfg");
  }
  const double norm_sq = l2_norm_sq(target);
  if (!(norm_sq > 0.0)) {
    throw std::invalid_argument("run_random_basis: target has zero norm");
  }

  Rng rng(cfg.seed);
  IncrementalLeastSquares solver(target, FitOptions{cfg.rel_tol});

  RandomBasisRun run;
  run.model.residual_sq = norm_sq;
  auto record = [&](double cond) {
    run.trace.raw_sq.push_back(run.model.residual_sq);
    run.trace.normalized.push_back(
        normalized_error(run.model.residual_sq, norm_sq));
    run.trace.cond.push_back(cond);
    run.trace.basis_size.push_back(run.model.basis.size());
  };
  record(kNoFit);
  run.discarded.push_back(false);

  for (std::size_t step = 1; step <= cfg.n_steps; ++step) {
    const BasisElement element = draw_basis_element(cfg, rng);
    solver.append(element);
    FitResult fit = solver.solve();
    if (cfg.cond_limit && fit.cond > *cfg.cond_limit) {
      solver.pop_back();
      run.discarded.push_back(true);
      record(run.model.cond.value_or(kNoFit));
      if (observe) observe(step, run.model);
      continue;
    }
    run.model.basis.push_back(element);
    run.model.coeffs = std::move(fit.coeffs);
    run.model.residual_sq = fit.residual_sq;
    run.model.cond = fit.cond;
    run.model.rank = fit.rank;
    run.discarded.push_back(false);
    record(fit.cond);
    if (observe) observe(step, run.model);
  }
  return run;
}

}  // namespace

RandomBasisRun run_random_basis(const GridFunction& target,
                                const RandomBasisConfig& cfg) {
  return run_loop(target, cfg, {});
}

BlowupRun run_constant_blowup(const RandomBasisConfig& cfg,
                              std::span<const std::size_t> snapshot_steps) {
  if (cfg.family != Family::kIndicator) {
    throw std::invalid_argument(
        "run_constant_blowup: requires the indicator family");
  }
  cfg.validate();
  const GridFunction target = GridFunction::constant(cfg.grid_size, 1.0);

  std::vector<std::size_t> steps(snapshot_steps.begin(), snapshot_steps.end());
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());

  BlowupRun out;
  out.run = run_loop(target, cfg,
                     [&](std::size_t step, const ApproxModel& model) {
                       if (!std::binary_search(steps.begin(), steps.end(),
                                               step)) {
                         return;
                       }
                       out.snapshots.push_back(
                           {step, target - model.evaluate(cfg.grid_size)});
                     });
  return out;
}

std::size_t count_sign_changes(const GridFunction& f, double zero_tol) {
  std::size_t changes = 0;
  int last = 0;
  for (double v : f.values()) {
    if (std::abs(v) <= zero_tol) continue;
    const int sign = v > 0.0 ? 1 : -1;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

}  // namespace randbasis
