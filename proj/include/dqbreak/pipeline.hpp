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

#ifndef DQBREAK_PIPELINE_HPP_
#define DQBREAK_PIPELINE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "dqbreak/autom.hpp"
#include "dqbreak/breaker.hpp"
#include "dqbreak/formula.hpp"
#include "dqbreak/graph.hpp"
#include "dqbreak/symmetry.hpp"

namespace dqbreak {

struct Detection {
  // Graph of the formula with duplicate clauses merged, so that every
  // automorphism is determined by its action on literals.
  FormulaGraph graph;
  GroupReport group;
  // Literal form of group.generators, same order.
  std::vector<LiteralPermutation> generators;
  SortedPrefix sorted;
  std::vector<EligibilityVerdict> verdicts;
  std::vector<LiteralPermutation> eligible;
  // Literal orbits with more than one element, as DIMACS literals.
  std::vector<std::vector<int>> literal_orbits;
};

Detection Detect(const Dqbf& dqbf, const AutomOptions& options = {});

struct BreakOutcome {
  Detection detection;
  BreakerArtifact artifact;
  Dqbf broken;
};

// Detect, keep the eligible generators (the first max_generators of them
// when given), encode and conjoin the breaker.
BreakOutcome BreakSymmetries(
    const Dqbf& dqbf, std::optional<std::size_t> max_generators = {},
    const AutomOptions& options = {},
    ChainDependencies mode = ChainDependencies::kBlock);

}  // namespace dqbreak

#endif  // DQBREAK_PIPELINE_HPP_
