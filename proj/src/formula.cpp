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

#include "dqbreak/formula.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dqbreak/error.hpp"

namespace dqbreak {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kMalformedHeader: return "MalformedHeader";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kUndeclaredVariable: return "UndeclaredVariable";
    case ErrorCode::kDuplicateQuantification: return "DuplicateQuantification";
    case ErrorCode::kBadTermination: return "BadTermination";
    case ErrorCode::kNotLinearizable: return "NotLinearizable";
    case ErrorCode::kInternalInconsistency: return "InternalInconsistency";
    case ErrorCode::kNotSorted: return "NotSorted";
    case ErrorCode::kIneligibleGenerator: return "IneligibleGenerator";
    case ErrorCode::kVariableCollision: return "VariableCollision";
    case ErrorCode::kIllDefined: return "IllDefined";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Clause NormalizeClause(Clause clause) {
  std::sort(clause.begin(), clause.end());
  clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  return clause;
}

void Prefix::Validate() {
  const std::size_t total = var_count();
  std::vector<std::uint8_t> seen(total, 0);
  auto mark = [&](Var v) {
    if (v == 0 || v > total) {
      throw Error(ErrorCode::kInvalidArgument,
                  "variable " + std::to_string(v) + " outside 1.." +
                      std::to_string(total));
    }
    if (seen[v - 1]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "variable " + std::to_string(v) + " quantified twice");
    }
    seen[v - 1] = 1;
  };
  for (Var x : universals) mark(x);
  std::vector<std::uint8_t> universal(total, 0);
  for (Var x : universals) universal[x - 1] = 1;
  for (Existential& e : existentials) {
    mark(e.var);
    std::sort(e.deps.begin(), e.deps.end());
    e.deps.erase(std::unique(e.deps.begin(), e.deps.end()), e.deps.end());
    for (Var d : e.deps) {
      if (d == 0 || d > total || !universal[d - 1]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "dependency " + std::to_string(d) + " of " +
                        std::to_string(e.var) + " is not universal");
      }
    }
  }
}

QuantifierIndex::QuantifierIndex(const Prefix& prefix)
    : kind_(prefix.var_count(), Quantifier::kUniversal),
      position_(prefix.var_count(), 0) {
  for (std::size_t p = 0; p < prefix.universals.size(); ++p) {
    kind_[prefix.universals[p] - 1] = Quantifier::kUniversal;
    position_[prefix.universals[p] - 1] = p;
  }
  for (std::size_t p = 0; p < prefix.existentials.size(); ++p) {
    kind_[prefix.existentials[p].var - 1] = Quantifier::kExistential;
    position_[prefix.existentials[p].var - 1] = p;
  }
}

Dqbf Dqbf::Make(Prefix prefix, std::vector<Clause> matrix) {
  prefix.Validate();
  const std::size_t total = prefix.var_count();
  for (Clause& c : matrix) {
    for (Literal l : c) {
      if (l.var == 0 || l.var > total) {
        throw Error(ErrorCode::kUndeclaredVariable,
                    "literal " + ToString(l) + " is not quantified");
      }
    }
    c = NormalizeClause(std::move(c));
  }
  return Dqbf{std::move(prefix), std::move(matrix)};
}

Interpretation MakeInterpretation(
    const Prefix& prefix,
    const std::function<bool(std::size_t, const std::vector<bool>&)>& fn) {
  Interpretation s;
  s.tables.reserve(prefix.existentials.size());
  for (std::size_t i = 0; i < prefix.existentials.size(); ++i) {
    const std::size_t width = prefix.existentials[i].deps.size();
    std::vector<bool> table(std::size_t{1} << width);
    std::vector<bool> bits(width);
    for (std::size_t b = 0; b < table.size(); ++b) {
      for (std::size_t d = 0; d < width; ++d) bits[d] = ((b >> d) & 1) != 0;
      table[b] = fn(i, bits);
    }
    s.tables.push_back(std::move(table));
  }
  return s;
}

bool EvalClause(const Clause& clause, const FullAssignment& a) {
  return std::any_of(clause.begin(), clause.end(),
                     [&](Literal l) { return a.value(l); });
}

bool EvalMatrix(const Dqbf& dqbf, const FullAssignment& a) {
  return std::all_of(dqbf.matrix.begin(), dqbf.matrix.end(),
                     [&](const Clause& c) { return EvalClause(c, a); });
}

InducedAssignmentBuilder::InducedAssignmentBuilder(const Prefix& prefix)
    : prefix_(&prefix), var_count_(prefix.var_count()) {
  QuantifierIndex index(prefix);
  dep_positions_.reserve(prefix.existentials.size());
  for (const Existential& e : prefix.existentials) {
    std::vector<std::size_t> positions;
    positions.reserve(e.deps.size());
    for (Var d : e.deps) positions.push_back(index.position(d));
    dep_positions_.push_back(std::move(positions));
  }
}

std::size_t InducedAssignmentBuilder::TableIndex(std::size_t existential,
                                                 Assignment sigma) const {
  std::size_t idx = 0;
  const auto& positions = dep_positions_[existential];
  for (std::size_t b = 0; b < positions.size(); ++b) {
    if (sigma.value_at(positions[b])) idx |= std::size_t{1} << b;
  }
  return idx;
}

void InducedAssignmentBuilder::BuildInto(const Interpretation& s,
                                         Assignment sigma,
                                         FullAssignment& out) const {
  const Prefix& prefix = *prefix_;
  for (std::size_t p = 0; p < prefix.universals.size(); ++p) {
    out.set(prefix.universals[p], sigma.value_at(p));
  }
  for (std::size_t i = 0; i < prefix.existentials.size(); ++i) {
    out.set(prefix.existentials[i].var, s.tables[i][TableIndex(i, sigma)]);
  }
}

FullAssignment InducedAssignmentBuilder::Build(const Interpretation& s,
                                               Assignment sigma) const {
  FullAssignment out(var_count_);
  BuildInto(s, sigma, out);
  return out;
}

FullAssignment InducedAssignment(const Prefix& prefix, const Interpretation& s,
                                 Assignment sigma) {
  return InducedAssignmentBuilder(prefix).Build(s, sigma);
}

bool TruthValue(const Prefix& prefix, const Interpretation& s,
                const std::function<bool(const FullAssignment&)>& matrix,
                std::size_t max_universals) {
  const std::size_t n = prefix.universals.size();
  if (n > max_universals || n >= 64) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::to_string(n) + " universals exceed the enumeration limit " +
                    std::to_string(max_universals));
  }
  InducedAssignmentBuilder builder(prefix);
  FullAssignment a(prefix.var_count());
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    builder.BuildInto(s, Assignment{bits}, a);
    if (!matrix(a)) return false;
  }
  return true;
}

bool TruthValue(const Dqbf& dqbf, const Interpretation& s,
                std::size_t max_universals) {
  return TruthValue(
      dqbf.prefix, s,
      [&](const FullAssignment& a) { return EvalMatrix(dqbf, a); },
      max_universals);
}

SortedPrefix TopologicalSort(const Prefix& prefix) {
  const std::size_t k = prefix.existentials.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return prefix.existentials[a].deps.size() <
                            prefix.existentials[b].deps.size();
                   });
  SortedPrefix out;
  out.prefix.universals = prefix.universals;
  out.permutation.resize(k);
  for (std::size_t pos = 0; pos < k; ++pos) {
    out.prefix.existentials.push_back(prefix.existentials[order[pos]]);
    out.permutation[order[pos]] = pos;
  }
  return out;
}

bool IsSubset(const std::vector<Var>& a, const std::vector<Var>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool IsProperSubset(const std::vector<Var>& a, const std::vector<Var>& b) {
  return a.size() < b.size() && IsSubset(a, b);
}

bool IsTopologicallySorted(const Prefix& prefix) {
  const auto& ex = prefix.existentials;
  for (std::size_t i = 0; i < ex.size(); ++i) {
    for (std::size_t j = 0; j < ex.size(); ++j) {
      if (i != j && IsProperSubset(ex[i].deps, ex[j].deps) && !(i < j)) {
        return false;
      }
    }
  }
  return true;
}

std::string ToString(Literal l) { return std::to_string(l.ToDimacs()); }

std::string ToString(const Clause& clause) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < clause.size(); ++i) {
    if (i) out << ' ';
    out << clause[i].ToDimacs();
  }
  out << ')';
  return out.str();
}

}  // namespace dqbreak
