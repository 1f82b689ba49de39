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

#include "dqbreak/autom.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dqbreak/error.hpp"
#include "dqbreak/partition.hpp"

namespace dqbreak {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }
  std::size_t Size(std::size_t x) { return size_[Find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

class Search {
 public:
  Search(const ColoredDigraph& graph, const AutomOptions& options)
      : graph_(graph), options_(options), refiner_(graph) {}

  GroupReport Run();

 private:
  void CountNode();
  bool Explore(const OrderedPartition& p, std::size_t depth, Perm& found);

  const ColoredDigraph& graph_;
  const AutomOptions& options_;
  Refiner refiner_;
  // First path: partition, trace and target cell per depth.
  std::vector<OrderedPartition> parts_;
  std::vector<std::uint64_t> traces_;
  std::vector<std::size_t> targets_;
  std::vector<Vertex> base_;
  std::size_t nodes_ = 0;
};

void Search::CountNode() {
  if (++nodes_ > options_.node_limit) {
    throw Error(ErrorCode::kBudgetExceeded,
                "automorphism search exceeded " +
                    std::to_string(options_.node_limit) + " nodes");
  }
}

bool Search::Explore(const OrderedPartition& p, std::size_t depth,
                     Perm& found) {
  if (p.is_discrete()) {
    const auto& first = parts_.back().lab();
    Perm gamma(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) gamma[first[i]] = p.at(i);
    if (!IsAutomorphism(graph_, gamma)) return false;
    found = std::move(gamma);
    return true;
  }
  const std::size_t target = targets_[depth];
  const std::size_t len = p.cell_size(target);
  for (std::size_t i = 0; i < len; ++i) {
    OrderedPartition child = p;
    const std::size_t s = child.Individualize(p.at(target + i));
    CountNode();
    const std::uint64_t trace = refiner_.Refine(child, {s});
    if (trace != traces_[depth + 1] || !child.SameShape(parts_[depth + 1])) {
      continue;
    }
    if (Explore(child, depth + 1, found)) return true;
  }
  return false;
}

GroupReport Search::Run() {
  const std::size_t n = graph_.vertex_count();
  OrderedPartition root = OrderedPartition::ByColor(graph_);
  CountNode();
  traces_.push_back(refiner_.RefineAll(root));
  parts_.push_back(root);
  while (!parts_.back().is_discrete()) {
    const OrderedPartition& p = parts_.back();
    const std::size_t target = p.TargetCell();
    targets_.push_back(target);
    base_.push_back(p.at(target));
    OrderedPartition child = p;
    const std::size_t s = child.Individualize(base_.back());
    CountNode();
    traces_.push_back(refiner_.Refine(child, {s}));
    parts_.push_back(std::move(child));
  }

  GroupReport report;
  UnionFind orbits(n);
  std::vector<BigInt> level_sizes(base_.size(), 1);
  for (std::size_t level = base_.size(); level-- > 0;) {
    const OrderedPartition& p = parts_[level];
    const std::size_t target = targets_[level];
    const Vertex b = base_[level];
    // Orbit representatives known not to be images of b in this stabilizer.
    std::vector<std::size_t> failed;
    for (std::size_t i = 0; i < p.cell_size(target); ++i) {
      const Vertex w = p.at(target + i);
      if (orbits.Find(w) == orbits.Find(b)) continue;
      const std::size_t rw = orbits.Find(w);
      if (std::any_of(failed.begin(), failed.end(), [&](std::size_t r) {
            return orbits.Find(r) == rw;
          })) {
        continue;
      }
      OrderedPartition child = p;
      const std::size_t s = child.Individualize(w);
      CountNode();
      const std::uint64_t trace = refiner_.Refine(child, {s});
      Perm gamma;
      if (trace == traces_[level + 1] && child.SameShape(parts_[level + 1]) &&
          Explore(child, level + 1, gamma)) {
        for (std::size_t v = 0; v < n; ++v) orbits.Union(v, gamma[v]);
        report.generators.push_back(std::move(gamma));
      } else {
        failed.push_back(w);
      }
    }
    level_sizes[level] = orbits.Size(b);
  }

  for (const BigInt& s : level_sizes) report.order *= s;
  std::vector<std::vector<Vertex>> by_root(n);
  for (Vertex v = 0; v < n; ++v) by_root[orbits.Find(v)].push_back(v);
  for (auto& orbit : by_root) {
    if (!orbit.empty()) report.orbits.push_back(std::move(orbit));
  }
  std::sort(report.orbits.begin(), report.orbits.end());
  report.base = base_;
  report.nodes = nodes_;
  return report;
}

}  // namespace

bool IsAutomorphism(const ColoredDigraph& graph, const Perm& perm) {
  if (perm.size() != graph.vertex_count() || !IsPermutation(perm)) {
    return false;
  }
  for (Vertex v = 0; v < perm.size(); ++v) {
    if (graph.color(perm[v]) != graph.color(v)) return false;
  }
  std::vector<Edge> mapped;
  mapped.reserve(graph.edge_count());
  for (const auto& [u, v] : graph.edges()) mapped.emplace_back(perm[u], perm[v]);
  std::sort(mapped.begin(), mapped.end());
  return mapped == graph.edges();
}

GroupReport FindAutomorphisms(const ColoredDigraph& graph,
                              const AutomOptions& options) {
  if (graph.vertex_count() > options.limits.max_vertices ||
      graph.edge_count() > options.limits.max_edges) {
    throw Error(ErrorCode::kBudgetExceeded, "graph too large");
  }
  return Search(graph, options).Run();
}

}  // namespace dqbreak
