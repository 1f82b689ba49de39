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

#include "dqbreak/graph.hpp"

#include <algorithm>
#include <ostream>

#include "dqbreak/error.hpp"

namespace dqbreak {

ColoredDigraph::ColoredDigraph(std::vector<Color> colors,
                               std::vector<Edge> edges)
    : colors_(std::move(colors)), edges_(std::move(edges)) {
  const std::size_t n = colors_.size();
  for (const Edge& e : edges_) {
    if (e.first >= n || e.second >= n) {
      throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offsets_[e.first + 1];
    ++in_offsets_[e.second + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  out_targets_.resize(edges_.size());
  in_sources_.resize(edges_.size());
  std::vector<std::size_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  // Edges are sorted by (from, to), so both lists come out sorted.
  for (const Edge& e : edges_) {
    out_targets_[out_fill[e.first]++] = e.second;
    in_sources_[in_fill[e.second]++] = e.first;
  }
}

bool ColoredDigraph::has_edge(Vertex from, Vertex to) const {
  auto targets = out_neighbors(from);
  return std::binary_search(targets.begin(), targets.end(), to);
}

VertexTag VertexLayout::Tag(Vertex u) const {
  const std::size_t n = var_count_;
  if (u < n) return {VertexKind::kVar, static_cast<std::uint32_t>(u + 1)};
  if (u < 3 * n) {
    const Literal l = Literal::FromCode(u - n);
    return {l.negated ? VertexKind::kNegLit : VertexKind::kPosLit, l.var};
  }
  return {VertexKind::kClause, static_cast<std::uint32_t>(u - 3 * n)};
}

FormulaGraph BuildGraph(const Dqbf& dqbf, const GraphLimits& limits) {
  const Prefix& prefix = dqbf.prefix;
  const std::size_t n = dqbf.var_count();
  VertexLayout layout(n, dqbf.matrix.size());

  std::size_t dependency_edges = 0;
  for (const Existential& e : prefix.existentials) {
    dependency_edges += e.deps.size();
  }
  std::size_t occurrence_edges = 0;
  for (const Clause& c : dqbf.matrix) occurrence_edges += c.size();
  const std::size_t variable_edges = 4 * n;
  const std::size_t total_edges =
      variable_edges + dependency_edges + occurrence_edges;
  if (layout.vertex_count() > limits.max_vertices ||
      total_edges > limits.max_edges) {
    throw Error(ErrorCode::kBudgetExceeded,
                "graph with " + std::to_string(layout.vertex_count()) +
                    " vertices and " + std::to_string(total_edges) +
                    " edges exceeds the size limit");
  }

  QuantifierIndex index(prefix);
  std::vector<Color> colors(layout.vertex_count(), 3);
  for (Var v = 1; v <= n; ++v) {
    const Color c = index.is_universal(v) ? 1 : 2;
    colors[layout.VarNode(v)] = c;
    colors[layout.LiteralNode(Pos(v))] = c;
    colors[layout.LiteralNode(Neg(v))] = c;
  }

  std::vector<Edge> edges;
  edges.reserve(total_edges);
  for (Var v = 1; v <= n; ++v) {
    const Vertex var = layout.VarNode(v);
    const Vertex pos = layout.LiteralNode(Pos(v));
    const Vertex neg = layout.LiteralNode(Neg(v));
    edges.emplace_back(var, pos);
    edges.emplace_back(var, neg);
    edges.emplace_back(pos, neg);
    edges.emplace_back(neg, pos);
  }
  for (const Existential& e : prefix.existentials) {
    for (Var x : e.deps) {
      edges.emplace_back(layout.VarNode(e.var), layout.VarNode(x));
    }
  }
  for (std::size_t i = 0; i < dqbf.matrix.size(); ++i) {
    for (Literal l : dqbf.matrix[i]) {
      edges.emplace_back(layout.ClauseNode(i), layout.LiteralNode(l));
    }
  }

  FormulaGraph out;
  out.graph = ColoredDigraph(std::move(colors), std::move(edges));
  out.layout = layout;
  out.variable_edges = variable_edges;
  out.dependency_edges = dependency_edges;
  out.occurrence_edges = occurrence_edges;
  return out;
}

void WriteDot(std::ostream& out, const FormulaGraph& g) {
  static constexpr const char* kFill[] = {"white", "white", "lightgray",
                                          "gray"};
  out << "digraph dqbf {\n";
  for (Vertex u = 0; u < g.graph.vertex_count(); ++u) {
    const VertexTag tag = g.layout.Tag(u);
    out << "  v" << u << " [label=\"";
    switch (tag.kind) {
      case VertexKind::kVar: out << 'v' << tag.index; break;
      case VertexKind::kPosLit: out << '+' << tag.index; break;
      case VertexKind::kNegLit: out << '-' << tag.index; break;
      case VertexKind::kClause: out << 'C' << tag.index + 1; break;
    }
    out << "\", style=filled, fillcolor=" << kFill[g.graph.color(u)]
        << ", shape="
        << (tag.kind == VertexKind::kClause ? "box"
            : tag.kind == VertexKind::kVar  ? "pentagon"
                                            : "circle")
        << "];\n";
  }
  for (const Edge& e : g.graph.edges()) {
    out << "  v" << e.first << " -> v" << e.second << ";\n";
  }
  out << "}\n";
}

void WriteGraphText(std::ostream& out, const ColoredDigraph& g) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    out << "n " << u + 1 << ' ' << static_cast<int>(g.color(u)) << '\n';
  }
  for (const Edge& e : g.edges()) {
    out << "e " << e.first + 1 << ' ' << e.second + 1 << '\n';
  }
}

}  // namespace dqbreak
