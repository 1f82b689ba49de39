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

#ifndef DQBREAK_AUTOM_HPP_
#define DQBREAK_AUTOM_HPP_

#include <cstddef>
#include <vector>

#include "dqbreak/graph.hpp"
#include "dqbreak/perm_group.hpp"

namespace dqbreak {

struct AutomOptions {
  // Search nodes (refinements) before kBudgetExceeded.
  std::size_t node_limit = 10'000'000;
  GraphLimits limits;
};

struct GroupReport {
  std::vector<Perm> generators;  // discovery order
  BigInt order = 1;
  std::vector<std::vector<Vertex>> orbits;  // ascending, by first element
  std::vector<Vertex> base;
  std::size_t nodes = 0;
};

// Color-preserving and edge-preserving bijection.
bool IsAutomorphism(const ColoredDigraph& graph, const Perm& perm);

// Individualization-refinement search for the automorphism group. The
// order is the product of the basic orbit sizes along the first path.
// Throws kBudgetExceeded when the graph exceeds options.limits or the search
// exceeds options.node_limit.
GroupReport FindAutomorphisms(const ColoredDigraph& graph,
                              const AutomOptions& options = {});

}  // namespace dqbreak

#endif  // DQBREAK_AUTOM_HPP_
