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

#include "dqbreak/pipeline.hpp"

#include <algorithm>

namespace dqbreak {

Detection Detect(const Dqbf& dqbf, const AutomOptions& options) {
  Dqbf merged = dqbf;
  std::sort(merged.matrix.begin(), merged.matrix.end());
  merged.matrix.erase(std::unique(merged.matrix.begin(), merged.matrix.end()),
                      merged.matrix.end());

  Detection d;
  d.graph = BuildGraph(merged, options.limits);
  d.group = FindAutomorphisms(d.graph.graph, options);
  d.sorted = TopologicalSort(dqbf.prefix);
  for (const Perm& p : d.group.generators) {
    d.generators.push_back(ExtractLiteralPermutation(p, d.graph.layout));
    d.verdicts.push_back(FilterEligible(d.sorted.prefix, d.generators.back()));
    if (d.verdicts.back().eligible) d.eligible.push_back(d.generators.back());
  }
  const VertexLayout& layout = d.graph.layout;
  for (const auto& orbit : d.group.orbits) {
    std::vector<int> lits;
    for (Vertex v : orbit) {
      const VertexTag tag = layout.Tag(v);
      if (tag.kind == VertexKind::kPosLit) lits.push_back(static_cast<int>(tag.index));
      if (tag.kind == VertexKind::kNegLit) lits.push_back(-static_cast<int>(tag.index));
    }
    if (lits.size() > 1) d.literal_orbits.push_back(std::move(lits));
  }
  return d;
}

BreakOutcome BreakSymmetries(const Dqbf& dqbf,
                             std::optional<std::size_t> max_generators,
                             const AutomOptions& options,
                             ChainDependencies mode) {
  BreakOutcome out{Detect(dqbf, options), {}, {}};
  std::vector<LiteralPermutation> gens = out.detection.eligible;
  if (max_generators && gens.size() > *max_generators) gens.resize(*max_generators);
  const Prefix& prefix = out.detection.sorted.prefix;
  out.artifact = EncodeCnf(prefix, gens, MakeVariableOrder(prefix), mode);
  out.broken = ApplyBreaker(dqbf, out.artifact);
  return out;
}

}  // namespace dqbreak
