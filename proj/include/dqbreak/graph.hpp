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

#ifndef DQBREAK_GRAPH_HPP_
#define DQBREAK_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "dqbreak/formula.hpp"

namespace dqbreak {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Color 1: universal variable/literal nodes, 2: existential ones, 3: clauses.
using Color = std::uint8_t;

enum class VertexKind : std::uint8_t { kVar, kPosLit, kNegLit, kClause };

struct VertexTag {
  VertexKind kind = VertexKind::kVar;
  std::uint32_t index = 0;  // variable (1-based) or clause (0-based)

  bool operator==(const VertexTag&) const = default;
};

// Directed vertex-colored graph with CSR adjacency in both directions.
// Edges are kept sorted by (from, to).
class ColoredDigraph {
 public:
  ColoredDigraph() = default;
  ColoredDigraph(std::vector<Color> colors, std::vector<Edge> edges);

  std::size_t vertex_count() const { return colors_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  Color color(Vertex v) const { return colors_[v]; }
  const std::vector<Color>& colors() const { return colors_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> out_neighbors(Vertex v) const {
    return {out_targets_.data() + out_offsets_[v],
            out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const Vertex> in_neighbors(Vertex v) const {
    return {in_sources_.data() + in_offsets_[v],
            in_sources_.data() + in_offsets_[v + 1]};
  }
  bool has_edge(Vertex from, Vertex to) const;

 private:
  std::vector<Color> colors_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_;
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Vertex> in_sources_;
};

// Vertex numbering of the formula graph:
//   VarNode(v)     = v - 1
//   PosLit(v)      = N + 2(v - 1)
//   NegLit(v)      = N + 2(v - 1) + 1
//   ClauseNode(i)  = 3N + i
// where N is the number of variables.
class VertexLayout {
 public:
  VertexLayout(std::size_t var_count, std::size_t clause_count)
      : var_count_(var_count), clause_count_(clause_count) {}

  Vertex VarNode(Var v) const { return v - 1; }
  Vertex LiteralNode(Literal l) const {
    return static_cast<Vertex>(var_count_ + l.code());
  }
  Vertex ClauseNode(std::size_t i) const {
    return static_cast<Vertex>(3 * var_count_ + i);
  }
  VertexTag Tag(Vertex u) const;

  std::size_t var_count() const { return var_count_; }
  std::size_t clause_count() const { return clause_count_; }
  std::size_t vertex_count() const { return 3 * var_count_ + clause_count_; }

 private:
  std::size_t var_count_;
  std::size_t clause_count_;
};

struct GraphLimits {
  std::size_t max_vertices = 2'000'000;
  std::size_t max_edges = 100'000'000;
};

struct FormulaGraph {
  ColoredDigraph graph;
  VertexLayout layout{0, 0};
  std::size_t variable_edges = 0;
  std::size_t dependency_edges = 0;
  std::size_t occurrence_edges = 0;
};

// Throws kBudgetExceeded when the graph would exceed `limits`.
FormulaGraph BuildGraph(const Dqbf& dqbf, const GraphLimits& limits = {});

void WriteDot(std::ostream& out, const FormulaGraph& g);
// "p edge <V> <E>", then "n <v> <color>" per vertex, "e <from> <to>" per
// edge, vertices 1-based.
void WriteGraphText(std::ostream& out, const ColoredDigraph& g);

}  // namespace dqbreak

#endif  // DQBREAK_GRAPH_HPP_
