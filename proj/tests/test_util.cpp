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

#include "test_util.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace dqbreak::testing {

Dqbf E1() {
  Prefix p{{1, 2}, {{3, {1}}, {4, {2}}}};
  return Dqbf::Make(p, {{Pos(1), Pos(3)}, {Pos(2), Pos(4)}});
}

Dqbf E2() {
  Prefix p{{1}, {{2, {1}}}};
  return Dqbf::Make(p, {{Pos(1)}, {Pos(2)}});
}

Dqbf E4() {
  Prefix p{{1, 2, 3}, {{4, {2}}, {5, {3}}}};
  // Pick one clause of each equivalence; the other four picks are
  // tautologies.
  return Dqbf::Make(p, {
                           {Neg(1), Pos(4), Neg(2), Pos(5), Pos(3)},
                           {Neg(1), Pos(4), Pos(2), Neg(5), Pos(3)},
                           {Pos(1), Neg(4), Neg(2), Pos(5), Neg(3)},
                           {Pos(1), Neg(4), Pos(2), Neg(5), Neg(3)},
                       });
}

Dqbf E5() {
  Prefix p{{1, 2}, {{3, {1, 2}}}};
  return Dqbf::Make(p, {{Pos(1), Pos(2), Pos(3)},
                        {Neg(1), Neg(2), Pos(3)},
                        {Pos(1), Pos(2), Neg(3)}});
}

Interpretation Tables(std::vector<std::vector<bool>> tables) {
  return Interpretation{std::move(tables)};
}

std::string DataPath(const std::string& name) {
  return std::string(DQBREAK_TEST_DATA) + "/" + name;
}

std::uint64_t BruteAutomorphismCount(const ColoredDigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> image(n);
  std::vector<std::uint8_t> used(n, 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> extend = [&](std::size_t v) {
    if (v == n) {
      ++count;
      return;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || g.color(w) != g.color(v)) continue;
      bool ok = g.has_edge(v, v) == g.has_edge(w, w);
      for (Vertex u = 0; u < v && ok; ++u) {
        ok = g.has_edge(v, u) == g.has_edge(w, image[u]) &&
             g.has_edge(u, v) == g.has_edge(image[u], w);
      }
      if (!ok) continue;
      used[w] = 1;
      image[v] = w;
      extend(v + 1);
      used[w] = 0;
    }
  };
  extend(0);
  return count;
}

namespace {

ColoredDigraph OneColor(std::size_t n, std::vector<Edge> edges) {
  return ColoredDigraph(std::vector<Color>(n, 1), std::move(edges));
}

std::vector<Edge> Both(const std::vector<Edge>& edges) {
  std::vector<Edge> out;
  for (auto [u, v] : edges) {
    out.emplace_back(u, v);
    out.emplace_back(v, u);
  }
  return out;
}

}  // namespace

std::vector<ColoredDigraph> SmallGraphFixtures() {
  std::vector<ColoredDigraph> out;
  out.push_back(OneColor(1, {}));
  out.push_back(OneColor(8, {}));
  for (Vertex n = 3; n <= 8; ++n) {
    std::vector<Edge> cycle;
    for (Vertex i = 0; i < n; ++i) cycle.emplace_back(i, (i + 1) % n);
    out.push_back(OneColor(n, cycle));
    out.push_back(OneColor(n, Both(cycle)));
  }
  {
    std::vector<Edge> path;
    for (Vertex i = 0; i + 1 < 6; ++i) path.emplace_back(i, i + 1);
    out.push_back(OneColor(6, path));
  }
  {
    std::vector<Edge> k4;
    for (Vertex i = 0; i < 4; ++i) {
      for (Vertex j = i + 1; j < 4; ++j) k4.emplace_back(i, j);
    }
    out.push_back(OneColor(4, Both(k4)));
  }
  {
    // Petersen graph: outer 5-cycle, inner pentagram, spokes.
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
      e.emplace_back(i, (i + 1) % 5);
      e.emplace_back(5 + i, 5 + (i + 2) % 5);
      e.emplace_back(i, 5 + i);
    }
    out.push_back(OneColor(10, Both(e)));
  }
  {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 8; ++i) {
      for (Vertex b = 1; b < 8; b <<= 1) {
        if ((i & b) == 0) e.emplace_back(i, i | b);
      }
    }
    out.push_back(OneColor(8, Both(e)));
  }
  {
    std::vector<Color> colors{2, 1, 1, 1, 1, 1};
    std::vector<Edge> e;
    for (Vertex i = 1; i < 6; ++i) e.emplace_back(0, i);
    out.emplace_back(colors, e);
  }
  out.push_back(OneColor(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}));

  std::mt19937_64 rng(2024);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 6 + rng() % 9;
    const std::size_t colors = 1 + rng() % 3;
    const std::uint64_t density = 15 + rng() % 30;
    std::vector<Color> c(n);
    for (auto& x : c) x = static_cast<Color>(1 + rng() % colors);
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u != v && rng() % 100 < density) e.emplace_back(u, v);
      }
    }
    out.emplace_back(c, e);
  }
  // Two copies of a random graph, so the copies can be exchanged.
  for (int i = 0; i < 10; ++i) {
    const std::size_t n = 4 + rng() % 4;
    std::vector<Color> c(2 * n);
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u) {
      c[u] = c[u + n] = static_cast<Color>(1 + rng() % 2);
      for (Vertex v = 0; v < n; ++v) {
        if (u != v && rng() % 100 < 30) {
          e.emplace_back(u, v);
          e.emplace_back(u + n, v + n);
        }
      }
    }
    out.emplace_back(c, e);
  }
  for (const Dqbf& f : {E1(), E2(), E5()}) out.push_back(BuildGraph(f).graph);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    RandomParams p = SuiteParams(seed, 2);
    p.clause_count = std::min<std::size_t>(p.clause_count, 5);
    const Dqbf f = RandomDqbf(p);
    if (3 * f.var_count() + f.matrix.size() <= 14) {
      out.push_back(BuildGraph(f).graph);
    }
  }
  return out;
}

RandomParams SuiteParams(std::uint64_t seed, std::size_t max_existentials) {
  std::mt19937_64 rng(seed * 7919 + 17);
  RandomParams p;
  p.seed = seed;
  p.universals = rng() % 4;
  p.existentials = 1 + rng() % max_existentials;
  p.max_dep = 2;
  p.clause_count = rng() % 7;
  p.clause_len = 1 + rng() % 3;
  p.plant_symmetry = seed % 2 == 0;
  return p;
}

}  // namespace dqbreak::testing
