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

#ifndef DQBREAK_BREAKER_HPP_
#define DQBREAK_BREAKER_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "dqbreak/formula.hpp"
#include "dqbreak/symmetry.hpp"

namespace dqbreak {

// v_1..v_m = D_1, y_1, D_2 \ D_1, y_2, ..., universals ascending inside each
// block. d[i] is the 1-based position of the i-th existential.
struct VariableOrder {
  std::vector<Var> sequence;
  std::vector<std::size_t> d;
  // Per position: true for universals.
  std::vector<bool> universal;
};

// Throws kNotSorted unless the prefix is topologically sorted.
VariableOrder MakeVariableOrder(const Prefix& prefix);

// Small propositional syntax tree, used to state the breaker literally and
// evaluate it on assignments.
class BoolExpr {
 public:
  enum class Kind { kTrue, kLit, kNot, kAnd, kOr, kImplies, kIff };

  static BoolExpr True();
  static BoolExpr Lit(Literal l);
  static BoolExpr Not(BoolExpr e);
  static BoolExpr And(std::vector<BoolExpr> kids);
  static BoolExpr Or(std::vector<BoolExpr> kids);
  static BoolExpr Implies(BoolExpr a, BoolExpr b);
  static BoolExpr Iff(BoolExpr a, BoolExpr b);

  Kind kind() const { return kind_; }
  const std::vector<BoolExpr>& kids() const { return kids_; }
  Literal literal() const { return lit_; }

  bool Eval(const FullAssignment& a) const;
  std::string ToString() const;

 private:
  Kind kind_ = Kind::kTrue;
  Literal lit_;
  std::vector<BoolExpr> kids_;
};

// The conjunction over generators g and existentials y_i of
//   (AND_{x in D_i} x <-> g(x)  AND  AND_{j<i} y_j <-> g(y_j)) -> (y_i -> g(y_i)).
// Conjuncts with g(y_i) = y_i are left out. Throws kIneligibleGenerator if a
// generator fails FilterEligible and kNotSorted for unsorted prefixes.
BoolExpr BuildBreakerFormula(const Prefix& prefix,
                             const std::vector<LiteralPermutation>& gens);

// Which universals a chain variable z_j may observe.
enum class ChainDependencies {
  // {v_l in X | l <= j}
  kPrefix,
  // Every universal of the order block that contains position j, i.e. all
  // universals placed before the next existential.
  kBlock,
};

struct FreshVar {
  Var var = 0;
  std::size_t generator = 0;  // index into used_generators
  std::size_t position = 0;   // 1-based position j in the order
  std::vector<Var> deps;
};

struct BreakerArtifact {
  Var first_fresh = 0;
  std::vector<FreshVar> fresh_vars;
  std::vector<Clause> clauses;
  std::vector<LiteralPermutation> used_generators;
};

// Lex-leader chain encoding of the breaker. Positions a generator fixes do
// not get a chain variable; the chain stops after the last moved
// existential and at the first universal mapped to its own negation.
BreakerArtifact EncodeCnf(const Prefix& prefix,
                          const std::vector<LiteralPermutation>& gens,
                          const VariableOrder& order,
                          ChainDependencies mode = ChainDependencies::kBlock);

// Original clauses plus breaker clauses over the sorted prefix extended by
// the fresh existentials. Throws kVariableCollision if the fresh variables
// do not continue the numbering of dqbf.
Dqbf ApplyBreaker(const Dqbf& dqbf, const BreakerArtifact& artifact);

}  // namespace dqbreak

#endif  // DQBREAK_BREAKER_HPP_
