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

// Jones/Barron greedy approximation in the convex hull of the Gaussian
// family {exp(-(w x + b)^2)}.
//
// Starting from f_0 = 0, every step draws (w, b) uniformly until the element
// g satisfies the selection test, then moves to
//   f_{N+1} = (1 - alpha_N) f_N + alpha_N g,
//   alpha_N = e_N^2 / (M''^2 + e_N^2).
// The selection test is
//   <f_N - f, g - f> < (M''^2 - M'^2) e_N^2 / (2 M''^2)
// or, in its relaxed form, <f_N - f, g - f> < sel_eps.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "randbasis/basis.hpp"
#include "randbasis/error_trace.hpp"
#include "randbasis/grid_function.hpp"
#include "randbasis/least_squares.hpp"
#include "randbasis/philox.hpp"

namespace randbasis {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return x >= lo && x <= hi; }
};

enum class SelectionRule {
  // sel_eps test on the first step, the M'/M'' inequality afterwards.
  kEpsilonFirst,
  // M'/M'' inequality on every step.
  kJones,
  // sel_eps test on every step.
  kEpsilon,
};

SelectionRule parse_selection_rule(const std::string& name);
std::string to_string(SelectionRule rule);

struct GreedyConfig {
  double m_prime = 1.5;
  double m_dprime = 2.0;
  double sel_eps = 1e-6;
  Interval w_range{0.0, 200.0};
  Interval b_range{-100.0, 0.0};
  std::uint64_t max_draws = 100000;
  std::size_t grid_size = 1000;
  std::uint64_t seed = 0;
  SelectionRule rule = SelectionRule::kEpsilonFirst;

  // Throws std::invalid_argument on a violated invariant.
  void validate() const;
};

// e^2 / (M''^2 + e^2). Throws for negative err_sq or nonpositive m_dprime.
double greedy_alpha(double err_sq, double m_dprime);

// Right-hand side of the selection test at `step` (0-based).
double selection_threshold(std::size_t step, double err_sq,
                           const GreedyConfig& cfg);

// M'^2 e0^2 / (N e0^2 + M'^2)
double greedy_bound_sq(std::size_t n, double e0_sq, double m_prime);

struct Selection {
  std::optional<Gaussian> element;
  std::uint64_t draws = 0;
  // <f_N - f, g - f> of the accepted element.
  double inner = 0.0;
};

// Draws Gaussians until <residual, g - target> < threshold, where
// residual = f_N - f. Returns an empty element after cfg.max_draws failures.
Selection select_candidate(const GridFunction& residual,
                           const GridFunction& target, double threshold,
                           const GreedyConfig& cfg, Rng& rng);

// Scales every coefficient by (1 - alpha) and appends the candidate with
// coefficient alpha = greedy_alpha(err_sq, cfg.m_dprime).
ApproxModel jones_step(ApproxModel model, const BasisElement& candidate,
                       double err_sq, const GreedyConfig& cfg);

struct GreedyRun {
  ErrorTrace trace;
  ApproxModel model;
  bool stalled = false;
  std::size_t stall_step = 0;
  std::uint64_t stall_draws = 0;
  std::uint64_t total_draws = 0;
};

// Runs up to n_steps greedy steps from f_0 = 0 with Rng(cfg.seed). Stops
// early when e_N^2 <= 1e-16 or when the candidate search stalls.
GreedyRun run_greedy(const GridFunction& target, std::size_t n_steps,
                     const GreedyConfig& cfg);

}  // namespace randbasis
