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

#include "dqbreak/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dqbreak/error.hpp"

namespace dqbreak {
namespace {

std::uint64_t Mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 29);
}

}  // namespace

OrderedPartition OrderedPartition::ByColor(const ColoredDigraph& graph) {
  std::map<Color, std::vector<Vertex>> by_color;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    by_color[graph.color(v)].push_back(v);
  }
  std::vector<std::vector<Vertex>> cells;
  for (auto& [color, members] : by_color) cells.push_back(std::move(members));
  return FromCells(graph.vertex_count(), cells);
}

OrderedPartition OrderedPartition::FromCells(
    std::size_t vertex_count, const std::vector<std::vector<Vertex>>& cells) {
  OrderedPartition p;
  p.lab_.reserve(vertex_count);
  p.pos_.assign(vertex_count, 0);
  p.cell_start_.assign(vertex_count, 0);
  p.cell_len_.assign(vertex_count, 0);
  std::vector<std::uint8_t> seen(vertex_count, 0);
  for (const auto& cell : cells) {
    if (cell.empty()) continue;
    const std::size_t start = p.lab_.size();
    for (Vertex v : cell) {
      if (v >= vertex_count || seen[v]) {
        throw Error(ErrorCode::kInvalidArgument, "cells do not partition");
      }
      seen[v] = 1;
      p.pos_[v] = static_cast<std::uint32_t>(p.lab_.size());
      p.lab_.push_back(v);
    }
    p.SetCell(start, cell.size());
    ++p.cell_count_;
  }
  if (p.lab_.size() != vertex_count) {
    throw Error(ErrorCode::kInvalidArgument, "cells do not cover all vertices");
  }
  return p;
}

void OrderedPartition::SetCell(std::size_t start, std::size_t len) {
  for (std::size_t i = start; i < start + len; ++i) {
    cell_start_[i] = static_cast<std::uint32_t>(start);
  }
  cell_len_[start] = static_cast<std::uint32_t>(len);
}

std::vector<std::size_t> OrderedPartition::cell_starts() const {
  std::vector<std::size_t> starts;
  starts.reserve(cell_count_);
  for (std::size_t i = 0; i < lab_.size(); i += cell_len_[i]) {
    starts.push_back(i);
  }
  return starts;
}

std::vector<std::vector<Vertex>> OrderedPartition::cells() const {
  std::vector<std::vector<Vertex>> out;
  for (std::size_t start : cell_starts()) {
    out.emplace_back(lab_.begin() + start,
                     lab_.begin() + start + cell_len_[start]);
  }
  return out;
}

std::size_t OrderedPartition::Individualize(Vertex v) {
  const std::size_t start = cell_of(v);
  const std::size_t len = cell_len_[start];
  if (len == 1) return start;
  const std::size_t p = pos_[v];
  std::swap(lab_[p], lab_[start]);
  pos_[lab_[p]] = static_cast<std::uint32_t>(p);
  pos_[lab_[start]] = static_cast<std::uint32_t>(start);
  SetCell(start, 1);
  SetCell(start + 1, len - 1);
  ++cell_count_;
  return start;
}

std::size_t OrderedPartition::TargetCell() const {
  std::size_t best = lab_.size();
  std::size_t best_len = lab_.size() + 1;
  for (std::size_t i = 0; i < lab_.size(); i += cell_len_[i]) {
    const std::size_t len = cell_len_[i];
    if (len > 1 && len < best_len) {
      best = i;
      best_len = len;
    }
  }
  return best;
}

bool OrderedPartition::SameShape(const OrderedPartition& other) const {
  if (cell_count_ != other.cell_count_ || lab_.size() != other.lab_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < lab_.size(); i += cell_len_[i]) {
    if (other.cell_start_[i] != i || other.cell_len_[i] != cell_len_[i]) {
      return false;
    }
  }
  return true;
}

Refiner::Refiner(const ColoredDigraph& graph)
    : graph_(graph),
      in_count_(graph.vertex_count(), 0),
      out_count_(graph.vertex_count(), 0),
      is_touched_(graph.vertex_count(), 0) {}

std::uint64_t Refiner::RefineAll(OrderedPartition& partition) {
  return Refine(partition, partition.cell_starts());
}

std::uint64_t Refiner::Refine(OrderedPartition& p,
                              const std::vector<std::size_t>& splitters) {
  std::uint64_t trace = 0x1234567ULL;
  std::vector<std::size_t> queue(splitters.begin(), splitters.end());
  std::vector<std::uint8_t> queued(p.vertex_count(), 0);
  for (std::size_t s : queue) queued[s] = 1;
  std::vector<Vertex> members;
  std::vector<std::size_t> cells;

  for (std::size_t head = 0; head < queue.size() && !p.is_discrete(); ++head) {
    const std::size_t s = queue[head];
    queued[s] = 0;
    const std::size_t len = p.cell_len_[s];
    members.assign(p.lab_.begin() + s, p.lab_.begin() + s + len);

    for (Vertex u : members) {
      for (Vertex v : graph_.out_neighbors(u)) {
        ++in_count_[v];
        if (!is_touched_[v]) {
          is_touched_[v] = 1;
          touched_.push_back(v);
        }
      }
      for (Vertex v : graph_.in_neighbors(u)) {
        ++out_count_[v];
        if (!is_touched_[v]) {
          is_touched_[v] = 1;
          touched_.push_back(v);
        }
      }
    }
    cells.clear();
    for (Vertex v : touched_) cells.push_back(p.cell_of(v));
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    trace = Mix(trace, s);
    for (std::size_t c : cells) {
      if (p.cell_len_[c] > 1) SplitCell(p, c, queue, queued, trace);
    }
    for (Vertex v : touched_) {
      in_count_[v] = 0;
      out_count_[v] = 0;
      is_touched_[v] = 0;
    }
    touched_.clear();
  }
  return trace;
}

void Refiner::SplitCell(OrderedPartition& p, std::size_t start,
                        std::vector<std::size_t>& queue,
                        std::vector<std::uint8_t>& queued,
                        std::uint64_t& trace) {
  const std::size_t len = p.cell_len_[start];
  auto key = [&](Vertex v) {
    return (static_cast<std::uint64_t>(in_count_[v]) << 32) | out_count_[v];
  };
  auto first = p.lab_.begin() + start;
  auto last = first + len;
  const std::uint64_t k0 = key(*first);
  if (std::all_of(first, last, [&](Vertex v) { return key(v) == k0; })) return;

  std::stable_sort(first, last,
                   [&](Vertex a, Vertex b) { return key(a) < key(b); });
  for (std::size_t i = start; i < start + len; ++i) {
    p.pos_[p.lab_[i]] = static_cast<std::uint32_t>(i);
  }

  std::vector<std::pair<std::size_t, std::size_t>> fragments;
  std::size_t frag_start = start;
  for (std::size_t i = start + 1; i <= start + len; ++i) {
    if (i == start + len || key(p.lab_[i]) != key(p.lab_[frag_start])) {
      fragments.emplace_back(frag_start, i - frag_start);
      frag_start = i;
    }
  }
  trace = Mix(trace, start);
  trace = Mix(trace, fragments.size());
  for (auto [fs, fl] : fragments) {
    p.SetCell(fs, fl);
    trace = Mix(trace, key(p.lab_[fs]));
    trace = Mix(trace, fl);
  }
  p.cell_count_ += fragments.size() - 1;

  const bool parent_queued = queued[start] != 0;
  std::size_t largest = 0;
  if (!parent_queued) {
    for (std::size_t f = 1; f < fragments.size(); ++f) {
      if (fragments[f].second > fragments[largest].second) largest = f;
    }
  }
  for (std::size_t f = 0; f < fragments.size(); ++f) {
    const std::size_t fs = fragments[f].first;
    if (parent_queued ? f == 0 : f == largest) continue;
    if (!queued[fs]) {
      queued[fs] = 1;
      queue.push_back(fs);
    }
  }
}

OrderedPartition Refine(const ColoredDigraph& graph,
                        const OrderedPartition& initial) {
  OrderedPartition p = initial;
  Refiner(graph).RefineAll(p);
  return p;
}

}  // namespace dqbreak
