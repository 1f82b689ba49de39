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

#ifndef DQBREAK_PERM_GROUP_HPP_
#define DQBREAK_PERM_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dqbreak {

using BigInt = boost::multiprecision::cpp_int;

// Permutation of 0..n-1 stored as an image array.
using Perm = std::vector<std::uint32_t>;

Perm IdentityPerm(std::size_t degree);
bool IsIdentity(const Perm& p);
// (a * b)(x) = b(a(x)): apply a first.
Perm Multiply(const Perm& a, const Perm& b);
Perm Inverse(const Perm& p);
bool IsPermutation(const Perm& p);

// Deterministic Schreier-Sims stabilizer chain.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, const std::vector<Perm>& generators);

  BigInt Order() const;
  bool Contains(const Perm& p) const;
  const std::vector<std::uint32_t>& base() const { return base_; }
  // Size of the basic orbit at each level.
  std::vector<std::size_t> OrbitSizes() const;

 private:
  struct Level {
    std::uint32_t point = 0;
    std::vector<Perm> gens;
    // transversal[b] maps point to b, for b in the basic orbit.
    std::map<std::uint32_t, Perm> transversal;
  };

  void RecomputeOrbit(Level& level);
  // Returns the residue and the level it stopped at.
  Perm Sift(const Perm& p, std::size_t& stop) const;
  void Build(const std::vector<Perm>& generators);
  std::uint32_t FirstMoved(const Perm& p) const;

  std::size_t degree_;
  std::vector<std::uint32_t> base_;
  std::vector<Level> levels_;
};

// Order of the group generated by `generators` acting on 0..degree-1.
BigInt GroupOrder(const std::vector<Perm>& generators, std::size_t degree);

// "2", "1024", ... when below 10^6, otherwise mantissa/exponent like
// "8.58e9".
std::string FormatOrder(const BigInt& order);

}  // namespace dqbreak

#endif  // DQBREAK_PERM_GROUP_HPP_
