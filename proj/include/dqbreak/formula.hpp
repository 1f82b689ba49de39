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

#ifndef DQBREAK_FORMULA_HPP_
#define DQBREAK_FORMULA_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace dqbreak {

// Variables are numbered from 1, as in DIMACS.
using Var = std::uint32_t;

struct Literal {
  Var var = 0;
  bool negated = false;

  constexpr Literal operator~() const { return Literal{var, !negated}; }

  // Dense index in [0, 2 * var_count): positive literal first.
  constexpr std::size_t code() const {
    return 2 * static_cast<std::size_t>(var - 1) + (negated ? 1 : 0);
  }
  static constexpr Literal FromCode(std::size_t code) {
    return Literal{static_cast<Var>(code / 2 + 1), (code & 1) != 0};
  }

  int ToDimacs() const {
    return negated ? -static_cast<int>(var) : static_cast<int>(var);
  }
  static Literal FromDimacs(int value) {
    return value < 0 ? Literal{static_cast<Var>(-value), true}
                     : Literal{static_cast<Var>(value), false};
  }

  auto operator<=>(const Literal&) const = default;
};

constexpr Literal Pos(Var v) { return Literal{v, false}; }
constexpr Literal Neg(Var v) { return Literal{v, true}; }

using Clause = std::vector<Literal>;

// Sorts by (var, negated) and removes duplicate literals. Clauses holding
// both v and -v are left as they are.
Clause NormalizeClause(Clause clause);

struct Existential {
  Var var = 0;
  std::vector<Var> deps;  // ascending

  bool operator==(const Existential&) const = default;
};

struct Prefix {
  std::vector<Var> universals;
  std::vector<Existential> existentials;

  std::size_t var_count() const {
    return universals.size() + existentials.size();
  }

  // Throws kInvalidArgument unless universals and existentials partition
  // 1..var_count() and every dependency is a universal. Sorts deps.
  void Validate();

  bool operator==(const Prefix&) const = default;
};

enum class Quantifier : std::uint8_t { kUniversal, kExistential };

// Per-variable lookup tables derived from a prefix.
class QuantifierIndex {
 public:
  explicit QuantifierIndex(const Prefix& prefix);

  Quantifier kind(Var v) const { return kind_[v - 1]; }
  bool is_universal(Var v) const { return kind(v) == Quantifier::kUniversal; }
  bool is_existential(Var v) const {
    return kind(v) == Quantifier::kExistential;
  }
  // Position of v in prefix.universals or prefix.existentials.
  std::size_t position(Var v) const { return position_[v - 1]; }
  std::size_t var_count() const { return kind_.size(); }

 private:
  std::vector<Quantifier> kind_;
  std::vector<std::size_t> position_;
};

struct Dqbf {
  Prefix prefix;
  std::vector<Clause> matrix;

  // Validates the prefix, normalizes every clause and checks that every
  // literal is quantified.
  static Dqbf Make(Prefix prefix, std::vector<Clause> matrix);

  std::size_t var_count() const { return prefix.var_count(); }

  bool operator==(const Dqbf&) const = default;
};

// Values of the universal variables, bit p holding prefix.universals[p].
struct Assignment {
  std::uint64_t bits = 0;

  bool value_at(std::size_t universal_position) const {
    return ((bits >> universal_position) & 1) != 0;
  }
};

// Values of all variables, indexed by var - 1.
class FullAssignment {
 public:
  FullAssignment() = default;
  explicit FullAssignment(std::size_t var_count) : values_(var_count, 0) {}

  bool value(Var v) const { return values_[v - 1] != 0; }
  bool value(Literal l) const { return value(l.var) != l.negated; }
  void set(Var v, bool b) { values_[v - 1] = b ? 1 : 0; }
  std::size_t size() const { return values_.size(); }

  bool operator==(const FullAssignment&) const = default;

 private:
  std::vector<std::uint8_t> values_;
};

// One Skolem function table per existential, in prefix order. Entry b of
// table i is the value of y_i when the dependencies of y_i, taken in
// ascending variable order, spell b least-significant bit first.
struct Interpretation {
  std::vector<std::vector<bool>> tables;

  bool operator==(const Interpretation&) const = default;
};

// Builds an interpretation whose i-th table is fn(i, deps as bools).
Interpretation MakeInterpretation(
    const Prefix& prefix,
    const std::function<bool(std::size_t, const std::vector<bool>&)>& fn);

bool EvalClause(const Clause& clause, const FullAssignment& a);
bool EvalMatrix(const Dqbf& dqbf, const FullAssignment& a);

// Precomputes where each existential reads its dependencies from, so that
// induced assignments can be produced in a tight loop.
class InducedAssignmentBuilder {
 public:
  explicit InducedAssignmentBuilder(const Prefix& prefix);

  FullAssignment Build(const Interpretation& s, Assignment sigma) const;
  void BuildInto(const Interpretation& s, Assignment sigma,
                 FullAssignment& out) const;
  // Table index of y_i under sigma.
  std::size_t TableIndex(std::size_t existential, Assignment sigma) const;

 private:
  const Prefix* prefix_;
  std::size_t var_count_;
  std::vector<std::vector<std::size_t>> dep_positions_;
};

FullAssignment InducedAssignment(const Prefix& prefix, const Interpretation& s,
                                 Assignment sigma);

inline constexpr std::size_t kDefaultMaxUniversals = 24;

// Conjunction of `matrix` over all induced assignments. Throws
// kBudgetExceeded when the prefix has more than max_universals universals.
bool TruthValue(const Prefix& prefix, const Interpretation& s,
                const std::function<bool(const FullAssignment&)>& matrix,
                std::size_t max_universals = kDefaultMaxUniversals);
bool TruthValue(const Dqbf& dqbf, const Interpretation& s,
                std::size_t max_universals = kDefaultMaxUniversals);

struct SortedPrefix {
  Prefix prefix;
  // old existential position -> new existential position
  std::vector<std::size_t> permutation;
};

// Stable sort of the existentials by dependency-set size.
SortedPrefix TopologicalSort(const Prefix& prefix);
bool IsTopologicallySorted(const Prefix& prefix);

// True iff a is a proper subset of b; both ascending.
bool IsProperSubset(const std::vector<Var>& a, const std::vector<Var>& b);
bool IsSubset(const std::vector<Var>& a, const std::vector<Var>& b);

std::string ToString(Literal l);
std::string ToString(const Clause& clause);

}  // namespace dqbreak

#endif  // DQBREAK_FORMULA_HPP_
