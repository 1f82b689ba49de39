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

#ifndef DQBREAK_PARTITION_HPP_
#define DQBREAK_PARTITION_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dqbreak/graph.hpp"

namespace dqbreak {

// Ordered partition of the vertex set. Cells are contiguous ranges of
// `lab`; a cell is identified by its start position, and cells are ordered
// by start.
class OrderedPartition {
 public:
  OrderedPartition() = default;
  // One cell per distinct color, ordered by color; vertices ascending.
  static OrderedPartition ByColor(const ColoredDigraph& graph);
  // Cells given explicitly, in order. Must cover 0..n-1 exactly once.
  static OrderedPartition FromCells(
      std::size_t vertex_count, const std::vector<std::vector<Vertex>>& cells);

  std::size_t vertex_count() const { return lab_.size(); }
  std::size_t cell_count() const { return cell_count_; }
  bool is_discrete() const { return cell_count_ == lab_.size(); }

  std::size_t cell_of(Vertex v) const { return cell_start_[pos_[v]]; }
  std::size_t cell_size(std::size_t start) const { return cell_len_[start]; }
  Vertex at(std::size_t position) const { return lab_[position]; }
  const std::vector<Vertex>& lab() const { return lab_; }

  // Starts of all cells, ascending.
  std::vector<std::size_t> cell_starts() const;
  std::vector<std::vector<Vertex>> cells() const;

  // Moves v into a new singleton cell placed at the front of its cell.
  // Returns the start of the singleton.
  std::size_t Individualize(Vertex v);

  // First non-singleton cell of minimum size, or vertex_count() if discrete.
  std::size_t TargetCell() const;

  // Same cell starts and sizes.
  bool SameShape(const OrderedPartition& other) const;

 private:
  friend class Refiner;

  void SetCell(std::size_t start, std::size_t len);

  std::vector<Vertex> lab_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> cell_start_;  // per position
  std::vector<std::uint32_t> cell_len_;    // valid at cell starts
  std::size_t cell_count_ = 0;
};

// Equitable refinement for directed graphs: repeatedly splits cells by the
// pair (edges in from splitter, edges out to splitter) until every vertex
// of a cell sees the same counts into and out of every cell.
class Refiner {
 public:
  explicit Refiner(const ColoredDigraph& graph);

  // Refines with the given cells as initial splitters. Returns a hash of
  // the sequence of splits, which is invariant under automorphisms.
  std::uint64_t Refine(OrderedPartition& partition,
                       const std::vector<std::size_t>& splitters);
  std::uint64_t RefineAll(OrderedPartition& partition);

 private:
  void SplitCell(OrderedPartition& p, std::size_t start,
                 std::vector<std::size_t>& queue,
                 std::vector<std::uint8_t>& queued, std::uint64_t& trace);

  const ColoredDigraph& graph_;
  std::vector<std::uint32_t> in_count_;
  std::vector<std::uint32_t> out_count_;
  std::vector<Vertex> touched_;
  std::vector<std::uint8_t> is_touched_;
};

// Convenience wrapper: copy of `initial` refined to an equitable partition.
OrderedPartition Refine(const ColoredDigraph& graph,
                        const OrderedPartition& initial);

}  // namespace dqbreak

#endif  // DQBREAK_PARTITION_HPP_
