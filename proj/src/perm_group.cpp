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

#include "dqbreak/perm_group.hpp"

#include <algorithm>
#include <deque>

namespace dqbreak {

Perm IdentityPerm(std::size_t degree) {
  Perm p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}

bool IsIdentity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != i) return false;
  }
  return true;
}

Perm Multiply(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

Perm Inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<std::uint32_t>(i);
  return q;
}

bool IsPermutation(const Perm& p) {
  std::vector<std::uint8_t> seen(p.size(), 0);
  for (std::uint32_t x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

StabilizerChain::StabilizerChain(std::size_t degree,
                                 const std::vector<Perm>& generators)
    : degree_(degree) {
  Build(generators);
}

std::uint32_t StabilizerChain::FirstMoved(const Perm& p) const {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != i) return static_cast<std::uint32_t>(i);
  }
  return static_cast<std::uint32_t>(p.size());
}

void StabilizerChain::RecomputeOrbit(Level& level) {
  level.transversal.clear();
  level.transversal.emplace(level.point, IdentityPerm(degree_));
  std::deque<std::uint32_t> queue{level.point};
  while (!queue.empty()) {
    const std::uint32_t b = queue.front();
    queue.pop_front();
    for (const Perm& s : level.gens) {
      const std::uint32_t c = s[b];
      if (!level.transversal.contains(c)) {
        level.transversal.emplace(c, Multiply(level.transversal.at(b), s));
        queue.push_back(c);
      }
    }
  }
}

Perm StabilizerChain::Sift(const Perm& p, std::size_t& stop) const {
  Perm h = p;
  for (std::size_t i = stop; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    const std::uint32_t beta = h[level.point];
    auto it = level.transversal.find(beta);
    if (it == level.transversal.end()) {
      stop = i;
      return h;
    }
    h = Multiply(h, Inverse(it->second));
  }
  stop = levels_.size();
  return h;
}

void StabilizerChain::Build(const std::vector<Perm>& generators) {
  for (const Perm& g : generators) {
    if (IsIdentity(g)) continue;
    bool fixes_base = std::all_of(base_.begin(), base_.end(),
                                  [&](std::uint32_t b) { return g[b] == b; });
    if (fixes_base) {
      base_.push_back(FirstMoved(g));
      levels_.push_back(Level{base_.back(), {}, {}});
    }
    // g belongs to every level whose earlier base points it fixes.
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      levels_[i].gens.push_back(g);
      if (g[levels_[i].point] != levels_[i].point) break;
    }
  }
  for (Level& level : levels_) RecomputeOrbit(level);

  std::size_t i = levels_.size();
  while (i > 0) {
    const std::size_t cur = i - 1;
    bool extended = false;
    std::vector<std::uint32_t> orbit;
    for (const auto& entry : levels_[cur].transversal) {
      orbit.push_back(entry.first);
    }
    for (std::uint32_t beta : orbit) {
      if (extended) break;
      for (std::size_t si = 0; si < levels_[cur].gens.size(); ++si) {
        const Perm s = levels_[cur].gens[si];
        const Perm u_beta = levels_[cur].transversal.at(beta);
        const Perm& u_image = levels_[cur].transversal.at(s[beta]);
        Perm h = Multiply(Multiply(u_beta, s), Inverse(u_image));
        if (IsIdentity(h)) continue;
        std::size_t stop = cur + 1;
        Perm residue = Sift(h, stop);
        if (stop == levels_.size() && IsIdentity(residue)) continue;
        if (stop == levels_.size()) {
          base_.push_back(FirstMoved(residue));
          levels_.push_back(Level{base_.back(), {}, {}});
        }
        for (std::size_t l = cur + 1; l <= stop; ++l) {
          levels_[l].gens.push_back(residue);
          RecomputeOrbit(levels_[l]);
        }
        i = stop + 1;
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

BigInt StabilizerChain::Order() const {
  BigInt order = 1;
  for (std::size_t size : OrbitSizes()) order *= size;
  return order;
}

std::vector<std::size_t> StabilizerChain::OrbitSizes() const {
  std::vector<std::size_t> sizes;
  for (const Level& level : levels_) {
    sizes.push_back(level.transversal.size());
  }
  return sizes;
}

bool StabilizerChain::Contains(const Perm& p) const {
  if (p.size() != degree_) return false;
  std::size_t stop = 0;
  Perm residue = Sift(p, stop);
  return stop == levels_.size() && IsIdentity(residue);
}

BigInt GroupOrder(const std::vector<Perm>& generators, std::size_t degree) {
  return StabilizerChain(degree, generators).Order();
}

std::string FormatOrder(const BigInt& order) {
  if (order < 1000000) return order.str();
  std::string digits = order.str();
  int exponent = static_cast<int>(digits.size()) - 1;
  // Round to three significant digits.
  int lead = std::stoi(digits.substr(0, 3));
  if (digits[3] >= '5') ++lead;
  if (lead == 1000) {
    lead = 100;
    ++exponent;
  }
  std::string m = std::to_string(lead);
  return m.substr(0, 1) + "." + m.substr(1) + "e" + std::to_string(exponent);
}

}  // namespace dqbreak
