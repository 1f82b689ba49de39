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

#include "dqbreak/breaker.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "dqbreak/error.hpp"

namespace dqbreak {

VariableOrder MakeVariableOrder(const Prefix& prefix) {
  if (!IsTopologicallySorted(prefix)) {
    throw Error(ErrorCode::kNotSorted, "prefix is not topologically sorted");
  }
  VariableOrder order;
  std::set<Var> placed;
  for (const Existential& e : prefix.existentials) {
    for (Var x : e.deps) {
      if (placed.insert(x).second) {
        order.sequence.push_back(x);
        order.universal.push_back(true);
      }
    }
    order.sequence.push_back(e.var);
    order.universal.push_back(false);
    order.d.push_back(order.sequence.size());
  }
  return order;
}

BoolExpr BoolExpr::True() { return BoolExpr(); }

BoolExpr BoolExpr::Lit(Literal l) {
  BoolExpr e;
  e.kind_ = Kind::kLit;
  e.lit_ = l;
  return e;
}

BoolExpr BoolExpr::Not(BoolExpr a) {
  BoolExpr e;
  e.kind_ = Kind::kNot;
  e.kids_.push_back(std::move(a));
  return e;
}

BoolExpr BoolExpr::And(std::vector<BoolExpr> kids) {
  BoolExpr e;
  e.kind_ = Kind::kAnd;
  e.kids_ = std::move(kids);
  return e;
}

BoolExpr BoolExpr::Or(std::vector<BoolExpr> kids) {
  BoolExpr e;
  e.kind_ = Kind::kOr;
  e.kids_ = std::move(kids);
  return e;
}

BoolExpr BoolExpr::Implies(BoolExpr a, BoolExpr b) {
  BoolExpr e;
  e.kind_ = Kind::kImplies;
  e.kids_.push_back(std::move(a));
  e.kids_.push_back(std::move(b));
  return e;
}

BoolExpr BoolExpr::Iff(BoolExpr a, BoolExpr b) {
  BoolExpr e;
  e.kind_ = Kind::kIff;
  e.kids_.push_back(std::move(a));
  e.kids_.push_back(std::move(b));
  return e;
}

bool BoolExpr::Eval(const FullAssignment& a) const {
  switch (kind_) {
    case Kind::kTrue:
      return true;
    case Kind::kLit:
      return a.value(lit_);
    case Kind::kNot:
      return !kids_[0].Eval(a);
    case Kind::kAnd:
      return std::all_of(kids_.begin(), kids_.end(),
                         [&](const BoolExpr& k) { return k.Eval(a); });
    case Kind::kOr:
      return std::any_of(kids_.begin(), kids_.end(),
                         [&](const BoolExpr& k) { return k.Eval(a); });
    case Kind::kImplies:
      return !kids_[0].Eval(a) || kids_[1].Eval(a);
    case Kind::kIff:
      return kids_[0].Eval(a) == kids_[1].Eval(a);
  }
  return false;
}

std::string BoolExpr::ToString() const {
  auto join = [&](const char* op) {
    if (kids_.empty()) return std::string(kind_ == Kind::kAnd ? "T" : "F");
    std::string s = "(";
    for (std::size_t i = 0; i < kids_.size(); ++i) {
      if (i > 0) s += op;
      s += kids_[i].ToString();
    }
    return s + ")";
  };
  switch (kind_) {
    case Kind::kTrue:
      return "T";
    case Kind::kLit:
      return std::to_string(lit_.ToDimacs());
    case Kind::kNot:
      return "!" + kids_[0].ToString();
    case Kind::kAnd:
      return join(" & ");
    case Kind::kOr:
      return join(" | ");
    case Kind::kImplies:
      return join(" -> ");
    case Kind::kIff:
      return join(" <-> ");
  }
  return "?";
}

namespace {

void RequireEligible(const Prefix& prefix,
                     const std::vector<LiteralPermutation>& gens) {
  for (const LiteralPermutation& g : gens) {
    if (g.var_count() != prefix.var_count()) {
      throw Error(ErrorCode::kIneligibleGenerator,
                  "generator has the wrong number of variables");
    }
    const EligibilityVerdict v = FilterEligible(prefix, g);
    if (!v.eligible) {
      throw Error(ErrorCode::kIneligibleGenerator,
                  g.ToString() + " violates " +
                      std::string(ConditionName(*v.violated)));
    }
  }
}

bool MovesSomeExistential(const Prefix& prefix, const LiteralPermutation& g) {
  return std::any_of(prefix.existentials.begin(), prefix.existentials.end(),
                     [&](const Existential& e) { return g.Moves(e.var); });
}

}  // namespace

BoolExpr BuildBreakerFormula(const Prefix& prefix,
                             const std::vector<LiteralPermutation>& gens) {
  RequireEligible(prefix, gens);
  std::vector<BoolExpr> conjuncts;
  for (const LiteralPermutation& g : gens) {
    const auto& ex = prefix.existentials;
    for (std::size_t i = 0; i < ex.size(); ++i) {
      if (!g.Moves(ex[i].var)) continue;
      std::vector<BoolExpr> antecedent;
      for (Var x : ex[i].deps) {
        antecedent.push_back(
            BoolExpr::Iff(BoolExpr::Lit(Pos(x)), BoolExpr::Lit(g(x))));
      }
      for (std::size_t j = 0; j < i; ++j) {
        antecedent.push_back(BoolExpr::Iff(BoolExpr::Lit(Pos(ex[j].var)),
                                           BoolExpr::Lit(g(ex[j].var))));
      }
      conjuncts.push_back(BoolExpr::Implies(
          BoolExpr::And(std::move(antecedent)),
          BoolExpr::Implies(BoolExpr::Lit(Pos(ex[i].var)),
                            BoolExpr::Lit(g(ex[i].var)))));
    }
  }
  if (conjuncts.empty()) return BoolExpr::True();
  return BoolExpr::And(std::move(conjuncts));
}

BreakerArtifact EncodeCnf(const Prefix& prefix,
                          const std::vector<LiteralPermutation>& gens,
                          const VariableOrder& order, ChainDependencies mode) {
  RequireEligible(prefix, gens);
  const std::size_t m = order.sequence.size();
  BreakerArtifact artifact;
  artifact.first_fresh = static_cast<Var>(prefix.var_count() + 1);
  Var next = artifact.first_fresh;
  std::set<Clause> emitted;
  auto emit = [&](Clause c) {
    c = NormalizeClause(std::move(c));
    if (emitted.insert(c).second) artifact.clauses.push_back(std::move(c));
  };

  // Universals visible to a chain variable at each position.
  std::vector<std::vector<Var>> visible(m + 1);
  {
    std::vector<Var> seen;
    for (std::size_t j = 1; j <= m; ++j) {
      if (order.universal[j - 1]) seen.push_back(order.sequence[j - 1]);
      visible[j] = seen;
    }
    if (mode == ChainDependencies::kBlock) {
      for (std::size_t j = m; j-- > 1;) {
        if (order.universal[j - 1]) visible[j] = visible[j + 1];
      }
    }
    for (auto& deps : visible) std::sort(deps.begin(), deps.end());
  }

  for (const LiteralPermutation& g : gens) {
    if (!MovesSomeExistential(prefix, g)) continue;
    const std::size_t gi = artifact.used_generators.size();
    artifact.used_generators.push_back(g);

    std::size_t last = 0;
    for (std::size_t i = 0; i < prefix.existentials.size(); ++i) {
      if (g.Moves(prefix.existentials[i].var)) last = order.d[i];
    }
    // The chain variable standing for z_{j-1}; nullopt means z is true.
    std::optional<Var> z;
    for (std::size_t j = 1; j <= last; ++j) {
      const Var v = order.sequence[j - 1];
      const Literal gv = g(v);
      if (!order.universal[j - 1] && g.Moves(v)) {
        Clause c{Neg(v), gv};
        if (z) c.push_back(Neg(*z));
        emit(std::move(c));
      }
      if (j == last || !g.Moves(v)) continue;
      // v <-> -v never holds, so every later antecedent is false.
      if (gv == Neg(v)) break;
      const Var fresh = next++;
      artifact.fresh_vars.push_back(FreshVar{fresh, gi, j, visible[j]});
      Clause a{Pos(fresh)};
      Clause b{Pos(fresh)};
      if (z) {
        a.push_back(Neg(*z));
        b.push_back(Neg(*z));
      }
      if (order.universal[j - 1]) {
        a.insert(a.end(), {Pos(v), gv});
        b.insert(b.end(), {Neg(v), ~gv});
      } else {
        a.push_back(Neg(v));
        b.push_back(gv);
      }
      emit(std::move(a));
      emit(std::move(b));
      z = fresh;
    }
  }
  return artifact;
}

Dqbf ApplyBreaker(const Dqbf& dqbf, const BreakerArtifact& artifact) {
  const SortedPrefix sorted = TopologicalSort(dqbf.prefix);
  Prefix prefix = sorted.prefix;
  Var expected = static_cast<Var>(dqbf.var_count() + 1);
  if (!artifact.fresh_vars.empty() && artifact.first_fresh != expected) {
    throw Error(ErrorCode::kVariableCollision,
                "fresh variables must start at " + std::to_string(expected));
  }
  for (const FreshVar& f : artifact.fresh_vars) {
    if (f.var != expected++) {
      throw Error(ErrorCode::kVariableCollision,
                  "fresh variable " + std::to_string(f.var) +
                      " does not extend the numbering");
    }
    prefix.existentials.push_back(Existential{f.var, f.deps});
  }
  std::vector<Clause> matrix = dqbf.matrix;
  matrix.insert(matrix.end(), artifact.clauses.begin(), artifact.clauses.end());
  return Dqbf::Make(std::move(prefix), std::move(matrix));
}

}  // namespace dqbreak
