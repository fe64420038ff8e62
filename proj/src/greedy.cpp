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

#include "randbasis/greedy.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace randbasis {
namespace {

constexpr double kConvergedErrSq = 1e-16;

void require_interval(const Interval& iv, const char* name) {
  if (!(std::isfinite(iv.lo) && std::isfinite(iv.hi) && iv.lo <= iv.hi)) {
    throw std::invalid_argument(std::string("GreedyConfig: invalid ") + name);
  }
}

}  // namespace

SelectionRule parse_selection_rule(const std::string& name) {
  if (name == "epsilon-first") return SelectionRule::kEpsilonFirst;
  if (name == "jones") return SelectionRule::kJones;
  if (name == "epsilon") return SelectionRule::kEpsilon;
  throw std::invalid_argument("unknown selection rule '" + name +
                              "' (expected epsilon-first, jones or epsilon)");
}

std::string to_string(SelectionRule rule) {
  switch (rule) {
    case SelectionRule::kEpsilonFirst:
      return "epsilon-first";
    case SelectionRule::kJones:
      return "jones";
    case SelectionRule::kEpsilon:
      return "epsilon";
  }
  return "unknown";
}

void GreedyConfig::validate() const {
  if (!(m_prime > 0.0 && m_dprime > m_prime)) {
    throw std::invalid_argument("GreedyConfig: need m_dprime > m_prime > 0");
  }
  if (!(sel_eps > 0.0)) {
    throw std::invalid_argument("GreedyConfig: sel_eps must be positive");
  }
  if (max_draws < 1) {
    throw std::invalid_argument("GreedyConfig: max_draws must be >= 1");
  }
  if (grid_size < 2) {
    throw std::invalid_argument("GreedyConfig: grid_size must be >= 2");
  }
  require_interval(w_range, "w_range");
  require_interval(b_range, "b_range");
}

double greedy_alpha(double err_sq, double m_dprime) {
  if (!(err_sq >= 0.0)) {
    throw std::invalid_argument("greedy_alpha: err_sq must be >= 0");
  }
  if (!(m_dprime > 0.0)) {
    throw std::invalid_argument("greedy_alpha: m_dprime must be positive");
  }
  return err_sq / (m_dprime * m_dprime + err_sq);
}

double selection_threshold(std::size_t step, double err_sq,
                           const GreedyConfig& cfg) {
  const bool relaxed =
      cfg.rule == SelectionRule::kEpsilon ||
      (cfg.rule == SelectionRule::kEpsilonFirst && step == 0);
  if (relaxed) return cfg.sel_eps;
  const double a = cfg.m_dprime * cfg.m_dprime;
  const double b = cfg.m_prime * cfg.m_prime;
  return (a - b) * err_sq / (2.0 * a);
}

double greedy_bound_sq(std::size_t n, double e0_sq, double m_prime) {
  const double m2 = m_prime * m_prime;
  return m2 * e0_sq / (static_cast<double>(n) * e0_sq + m2);
}

Selection select_candidate(const GridFunction& residual,
                           const GridFunction& target, double threshold,
                           const GreedyConfig& cfg, Rng& rng) {
  const std::size_t m = target.size();
  if (residual.size() != m) {
    throw std::invalid_argument("select_candidate: grid sizes differ");
  }
  std::vector<double> x(m);
  for (std::size_t k = 0; k < m; ++k) x[k] = GridFunction::node(k, m);

  Selection out;
  for (std::uint64_t draw = 1; draw <= cfg.max_draws; ++draw) {
    const Gaussian g{rng.uniform(cfg.w_range.lo, cfg.w_range.hi),
                     rng.uniform(cfg.b_range.lo, cfg.b_range.hi)};
    double sum = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      sum += residual[k] * (g(x[k]) - target[k]);
    }
    const double inner = sum / static_cast<double>(m);
    if (inner < threshold) {
      out.element = g;
      out.draws = draw;
      out.inner = inner;
      return out;
    }
  }
  out.draws = cfg.max_draws;
  return out;
}

ApproxModel jones_step(ApproxModel model, const BasisElement& candidate,
                       double err_sq, const GreedyConfig& cfg) {
  const double alpha = greedy_alpha(err_sq, cfg.m_dprime);
  for (double& c : model.coeffs) c *= 1.0 - alpha;
  model.basis.push_back(candidate);
  model.coeffs.push_back(alpha);
  return model;
}

GreedyRun run_greedy(const GridFunction& target, std::size_t n_steps,
                     const GreedyConfig& cfg) {
  cfg.validate();
  if (target.size() != cfg.grid_size) {
    throw std::invalid_argument("run_greedy: target grid does not match cfg");
  }
  const double e0_sq = l2_norm_sq(target);
  if (!(e0_sq > 0.0)) {
    throw std::invalid_argument("run_greedy: target has zero norm");
  }
  const std::size_t m = target.size();
  Rng rng(cfg.seed);

  GreedyRun run;
  ErrorTrace& trace = run.trace;
  auto record = [&](double err_sq, double alpha) {
    const std::size_t n = trace.raw_sq.size();
    trace.raw_sq.push_back(err_sq);
    trace.normalized.push_back(normalized_error(err_sq, e0_sq));
    trace.bound_sq.push_back(greedy_bound_sq(n, e0_sq, cfg.m_prime));
    trace.alphas.push_back(alpha);
    trace.basis_size.push_back(run.model.basis.size());
  };

  std::vector<double> approx(m, 0.0);
  GridFunction residual = GridFunction::zeros(m) - target;
  double err_sq = e0_sq;
  record(err_sq, 0.0);

  for (std::size_t step = 0; step < n_steps; ++step) {
    if (err_sq <= kConvergedErrSq) break;
    const double threshold = selection_threshold(step, err_sq, cfg);
    const Selection sel = select_candidate(residual, target, threshold, cfg, rng);
    run.total_draws += sel.draws;
    if (!sel.element) {
      run.stalled = true;
      run.stall_step = step;
      run.stall_draws = sel.draws;
      break;
    }
    const double alpha = greedy_alpha(err_sq, cfg.m_dprime);
    run.model = jones_step(std::move(run.model), *sel.element, err_sq, cfg);

    const Gaussian& g = *sel.element;
    std::vector<double> r(m);
    for (std::size_t k = 0; k < m; ++k) {
      approx[k] = (1.0 - alpha) * approx[k] +
                  alpha * g(GridFunction::node(k, m));
      r[k] = approx[k] - target[k];
    }
    residual = GridFunction(std::move(r));
    err_sq = l2_norm_sq(residual);
    record(err_sq, alpha);
  }
  run.model.residual_sq = err_sq;
  run.model.rank = run.model.basis.size();
  return run;
}

}  // namespace randbasis
