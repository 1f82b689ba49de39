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

#include "dqbreak/generators.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "dqbreak/error.hpp"
#include "dqbreak/symmetry.hpp"

namespace dqbreak {

Dqbf Kbkf(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "kbkf needs N >= 1");
  auto d = [](std::size_t i) { return static_cast<Var>(3 * i - 2); };
  auto e = [](std::size_t i) { return static_cast<Var>(3 * i - 1); };
  auto x = [](std::size_t i) { return static_cast<Var>(3 * i); };
  auto f = [n](std::size_t i) { return static_cast<Var>(3 * n + i); };

  Prefix prefix;
  std::vector<Var> seen;
  for (std::size_t i = 1; i <= n; ++i) {
    prefix.existentials.push_back({d(i), seen});
    prefix.existentials.push_back({e(i), seen});
    seen.push_back(x(i));
    prefix.universals.push_back(x(i));
  }
  for (std::size_t i = 1; i <= n; ++i) prefix.existentials.push_back({f(i), seen});

  std::vector<Clause> matrix;
  matrix.push_back({Neg(d(1)), Neg(e(1))});
  for (std::size_t i = 1; i < n; ++i) {
    matrix.push_back({Pos(d(i)), Pos(x(i)), Neg(d(i + 1)), Neg(e(i + 1))});
    matrix.push_back({Pos(e(i)), Neg(x(i)), Neg(d(i + 1)), Neg(e(i + 1))});
  }
  Clause last_d{Pos(d(n)), Pos(x(n))};
  Clause last_e{Pos(e(n)), Neg(x(n))};
  for (std::size_t i = 1; i <= n; ++i) {
    last_d.push_back(Neg(f(i)));
    last_e.push_back(Neg(f(i)));
  }
  matrix.push_back(std::move(last_d));
  matrix.push_back(std::move(last_e));
  for (std::size_t i = 1; i <= n; ++i) {
    matrix.push_back({Pos(x(i)), Pos(f(i))});
    matrix.push_back({Neg(x(i)), Pos(f(i))});
  }
  return Dqbf::Make(std::move(prefix), std::move(matrix));
}

Dqbf Parity(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "parity needs N >= 1");
  const Var z = static_cast<Var>(n + 1);
  auto x = [](std::size_t i) { return static_cast<Var>(i); };
  // t_1 is x_1 itself.
  auto t = [n](std::size_t i) { return static_cast<Var>(i == 1 ? 1 : n + i); };

  Prefix prefix;
  prefix.universals.push_back(z);
  for (std::size_t i = 1; i <= n; ++i) prefix.existentials.push_back({x(i), {}});
  for (std::size_t i = 2; i <= n; ++i) prefix.existentials.push_back({t(i), {z}});

  std::vector<Clause> matrix;
  for (std::size_t i = 2; i <= n; ++i) {
    // t_i <-> t_{i-1} xor x_i
    const Var a = t(i - 1);
    const Var b = x(i);
    const Var c = t(i);
    matrix.push_back({Neg(a), Neg(b), Neg(c)});
    matrix.push_back({Pos(a), Pos(b), Neg(c)});
    matrix.push_back({Pos(a), Neg(b), Pos(c)});
    matrix.push_back({Neg(a), Pos(b), Pos(c)});
  }
  matrix.push_back({Pos(z), Pos(t(n))});
  matrix.push_back({Neg(z), Neg(t(n))});
  return Dqbf::Make(std::move(prefix), std::move(matrix));
}

namespace {

// Raw engine output reduced by modulo, so sequences match across standard
// libraries.
std::size_t Draw(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

std::vector<std::vector<Var>> SmallSubsets(std::size_t n, std::size_t max) {
  std::vector<std::vector<Var>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > max) continue;
    std::vector<Var> s;
    for (std::size_t b = 0; b < n; ++b) {
      if ((mask >> b) & 1) s.push_back(static_cast<Var>(b + 1));
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

Dqbf RandomDqbf(const RandomParams& p) {
  const std::size_t n = p.universals;
  const std::size_t k = p.existentials;
  if (n > 16 || k > 16) {
    throw Error(ErrorCode::kInvalidArgument, "random formula size out of range");
  }
  std::mt19937_64 rng(p.seed);
  const auto subsets = SmallSubsets(n, p.max_dep);

  Prefix prefix;
  for (std::size_t i = 1; i <= n; ++i) prefix.universals.push_back(static_cast<Var>(i));
  for (std::size_t i = 1; i <= k; ++i) {
    prefix.existentials.push_back(
        {static_cast<Var>(n + i), subsets[Draw(rng, subsets.size())]});
  }

  std::vector<Literal> images;
  for (std::size_t v = 1; v <= n + k; ++v) images.push_back(Pos(static_cast<Var>(v)));
  if (p.plant_symmetry && n + k > 0) {
    if (n >= 2) {
      images[0] = Pos(2);
      images[1] = Pos(1);
      auto swap_deps = [](std::vector<Var> deps) {
        for (Var& x : deps) x = x == 1 ? 2 : x == 2 ? 1 : x;
        std::sort(deps.begin(), deps.end());
        return deps;
      };
      std::size_t first = 0;
      if (k >= 2) {
        images[n] = Pos(static_cast<Var>(n + 2));
        images[n + 1] = Pos(static_cast<Var>(n + 1));
        prefix.existentials[1].deps = swap_deps(prefix.existentials[0].deps);
        first = 2;
      }
      for (std::size_t i = first; i < k; ++i) {
        auto& deps = prefix.existentials[i].deps;
        if (swap_deps(deps) != deps) {
          // Exactly one of x1, x2: drop it so the set is swap-invariant.
          std::erase_if(deps, [](Var x) { return x <= 2; });
        }
      }
    } else {
      // Variable 1 is x1 or, without universals, y1.
      images[0] = Neg(1);
    }
  }
  const auto g = LiteralPermutation::FromImages(images);

  const std::size_t vars = n + k;
  const std::size_t len = std::min(p.clause_len, vars);
  std::vector<Clause> matrix;
  std::size_t attempts = 0;
  while (matrix.size() < p.clause_count && vars > 0 && attempts < 100 * (p.clause_count + 1)) {
    ++attempts;
    std::vector<Var> pool;
    for (std::size_t v = 1; v <= vars; ++v) pool.push_back(static_cast<Var>(v));
    Clause c;
    for (std::size_t l = 0; l < len; ++l) {
      const std::size_t at = Draw(rng, pool.size());
      c.push_back(Literal{pool[at], Draw(rng, 2) == 1});
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
    }
    c = NormalizeClause(std::move(c));
    if (!p.plant_symmetry) {
      matrix.push_back(std::move(c));
      continue;
    }
    Clause image;
    for (const Literal& l : c) image.push_back(g(l));
    image = NormalizeClause(std::move(image));
    if (image == c) {
      matrix.push_back(std::move(c));
    } else if (matrix.size() + 2 <= p.clause_count) {
      matrix.push_back(std::move(c));
      matrix.push_back(std::move(image));
    }
  }
  return Dqbf::Make(std::move(prefix), std::move(matrix));
}

}  // namespace dqbreak
