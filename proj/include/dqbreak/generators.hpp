// Copyright 2026 The dqbreak Authors
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

#ifndef DQBREAK_GENERATORS_HPP_
#define DQBREAK_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>

#include "dqbreak/formula.hpp"

namespace dqbreak {

// Kleine Buening-Karpinski-Flogel formulas, lifted to dependency form:
//   Ed1 e1 Ax1 Ed2 e2 Ax2 ... AxN Ef1..fN
// with d_i, e_i depending on x_1..x_{i-1} and every f_i on all x. False for
// every N. Variables d_i = 3i-2, e_i = 3i-1, x_i = 3i, f_i = 3N+i.
Dqbf Kbkf(std::size_t n);

// Ex1..xN Az Et2..tN: t_i is the parity of x_1..x_i, and the last two
// clauses demand t_N = -z. Variables x_i = i, z = N+1, t_i = N+i.
Dqbf Parity(std::size_t n);

struct RandomParams {
  std::uint64_t seed = 1;
  std::size_t universals = 3;
  std::size_t existentials = 2;
  std::size_t max_dep = 2;
  std::size_t clause_count = 6;
  std::size_t clause_len = 3;
  // Close the matrix and the prefix under a fixed involution: x1 <-> x2
  // (with y1 <-> y2) when there are two universals, otherwise a sign flip.
  bool plant_symmetry = false;
};

// Deterministic for fixed params. Universals are 1..n, existentials follow.
Dqbf RandomDqbf(const RandomParams& params);

}  // namespace dqbreak

#endif  // DQBREAK_GENERATORS_HPP_
