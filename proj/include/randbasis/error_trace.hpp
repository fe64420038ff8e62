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
#include <vector>

namespace randbasis {

// Per-step errors of an approximation run. Index N holds the state after N
// basis elements were added; index 0 is the initial approximation f_0 = 0.
//
// raw_sq, normalized and basis_size always share a length. bound_sq and
// alphas are filled by the greedy scheme only; cond by least-squares schemes
// only. Absent columns are empty.
struct ErrorTrace {
  std::vector<double> raw_sq;
  std::vector<double> normalized;
  std::vector<double> bound_sq;
  std::vector<double> alphas;
  std::vector<double> cond;
  std::vector<std::size_t> basis_size;

  std::size_t steps() const { return raw_sq.size(); }
};

}  // namespace randbasis
