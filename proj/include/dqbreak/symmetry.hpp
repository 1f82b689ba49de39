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

#ifndef DQBREAK_SYMMETRY_HPP_
#define DQBREAK_SYMMETRY_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dqbreak/formula.hpp"
#include "dqbreak/graph.hpp"
#include "dqbreak/perm_group.hpp"

namespace dqbreak {

// Permutation of the literals that commutes with negation. Only the images
// of positive literals are stored; g(-v) is -g(v) by construction.
class LiteralPermutation {
 public:
  LiteralPermutation() = default;
  static LiteralPermutation Identity(std::size_t var_count);
  // images[v - 1] is the image of +v. Throws kInvalidArgument unless the
  // underlying variable map is a bijection of 1..images.size().
  static LiteralPermutation FromImages(std::vector<Literal> images);

  std::size_t var_count() const { return images_.size(); }
  Literal operator()(Literal l) const {
    const Literal im = images_[l.var - 1];
    return l.negated ? ~im : im;
  }
  Literal operator()(Var v) const { return images_[v - 1]; }
  bool Moves(Var v) const { return images_[v - 1] != Pos(v); }
  bool IsIdentity() const;

  // Apply *this first, then `then`.
  LiteralPermutation Then(const LiteralPermutation& then) const;
  LiteralPermutation Inverse() const;

  const std::vector<Literal>& images() const { return images_; }
  // Cycle notation over DIMACS literals, one cycle per mirror pair, e.g.
  // "(1 2)" for a swap and "(1 -1)" for a flip; "()" for the identity.
  std::string ToString() const;

  auto operator<=>(const LiteralPermutation&) const = default;

 private:
  explicit LiteralPermutation(std::vector<Literal> images)
      : images_(std::move(images)) {}
  std::vector<Literal> images_;
};

// Reads the literal map off the action of a graph automorphism on literal
// nodes. Throws kInternalInconsistency if the automorphism does not act on
// variable and literal nodes like a negation-compatible literal map.
LiteralPermutation ExtractLiteralPermutation(const Perm& automorphism,
                                             const VertexLayout& layout);

// Quantifier types are preserved and x in D_j implies g(x) in D_{g(y_j)}.
bool CheckAdmissible(const Prefix& prefix, const LiteralPermutation& perm);
std::vector<Clause> ApplyToMatrix(const std::vector<Clause>& matrix,
                                  const LiteralPermutation& perm);
// The set of clauses is mapped onto itself; repeated clauses are ignored.
bool CheckSyntactic(const Dqbf& dqbf, const LiteralPermutation& perm);

enum class Condition { kC1, kC2, kC3 };
std::string_view ConditionName(Condition c);

// Witness indices are 1-based positions in the sorted prefix:
//   C1: (i, x)  x is the universal in D_i mapped outside D_i
//   C2: (i, j)  g(y_i) is over variable y_j with D_j != D_i, j = 0 when it
//               is not existential
//   C3: (i, j)  D_i, D_j incomparable, y_i moved, and y_j or D_j \ D_i moved
struct EligibilityVerdict {
  bool eligible = true;
  std::optional<Condition> violated;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// Checks the three conditions under which a generator may contribute to the
// conjunctive breaker. Throws kNotSorted unless the prefix is topologically
// sorted.
EligibilityVerdict FilterEligible(const Prefix& prefix,
                                  const LiteralPermutation& perm);

// Closure of a generator set under composition; throws kBudgetExceeded above
// `limit` elements.
std::vector<LiteralPermutation> GroupClosure(
    const std::vector<LiteralPermutation>& generators, std::size_t var_count,
    std::size_t limit = 1 << 16);

}  // namespace dqbreak

#endif  // DQBREAK_SYMMETRY_HPP_
