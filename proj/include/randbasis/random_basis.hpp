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

// Random-basis (RVFL-style) approximation: nonlinear parameters are drawn at
// random and frozen, and only the linear weights are refit by least squares
// after every new element.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "randbasis/basis.hpp"
#include "randbasis/error_trace.hpp"
#include "randbasis/greedy.hpp"
#include "randbasis/least_squares.hpp"
#include "randbasis/philox.hpp"

namespace randbasis {

enum class Family { kGaussian, kIndicator };

Family parse_family(const std::string& name);
std::string to_string(Family family);

struct RandomBasisConfig {
  Family family = Family::kGaussian;
  Interval w_range{0.0, 200.0};
  Interval b_range{-200.0, 200.0};
  Interval a_range{0.0, 1.0};
  Interval sigma_range{0.0, 1.0};
  std::size_t n_steps = 100;
  std::size_t grid_size = 1000;
  std::uint64_t seed = 0;
  // When set, an element whose fit has cond above the limit is discarded.
  std::optional<double> cond_limit;
  double rel_tol = 1e-12;

  void validate() const;
};

BasisElement draw_basis_element(const RandomBasisConfig& cfg, Rng& rng);

struct StepResult {
  ApproxModel model;
  bool discarded = false;
};

// Refits basis + {element} against target from scratch. With a cond_limit,
// an ill-conditioned fit is rejected and `previous` is returned unchanged
// with discarded = true.
StepResult rvfl_step(const ApproxModel& previous, const BasisElement& element,
                     const GridFunction& target,
                     std::optional<double> cond_limit = std::nullopt,
                     FitOptions options = {});

struct RandomBasisRun {
  ErrorTrace trace;
  ApproxModel model;
  std::vector<bool> discarded;  // per step, index 0 unused
};

// n_steps rounds of draw + refit from f_0 = 0 with Rng(cfg.seed).
RandomBasisRun run_random_basis(const GridFunction& target,
                                const RandomBasisConfig& cfg);

struct ResidualSnapshot {
  std::size_t step = 0;
  GridFunction residual;  // target - f_N
};

struct BlowupRun {
  RandomBasisRun run;
  std::vector<ResidualSnapshot> snapshots;
};

// Approximates the constant 1 with random indicators and records the
// residual function at each of `snapshot_steps` that is reached.
BlowupRun run_constant_blowup(const RandomBasisConfig& cfg,
                              std::span<const std::size_t> snapshot_steps);

// Sign changes of a sampled function, ignoring samples with |v| <= zero_tol.
std::size_t count_sign_changes(const GridFunction& f, double zero_tol = 1e-12);

}  // namespace randbasis
