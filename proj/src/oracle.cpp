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

#include "dqbreak/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>

#include "dqbreak/error.hpp"

namespace dqbreak {

std::optional<std::uint64_t> InterpretationCount(const Prefix& prefix) {
  std::uint64_t log2 = 0;
  for (const Existential& e : prefix.existentials) {
    if (e.deps.size() >= 7) return std::nullopt;
    log2 += std::uint64_t{1} << e.deps.size();
    if (log2 >= 64) return std::nullopt;
  }
  return std::uint64_t{1} << log2;
}

InterpretationEnumerator::InterpretationEnumerator(const Prefix& prefix,
                                                   const OracleBudget& budget) {
  const auto count = InterpretationCount(prefix);
  if (!count || *count > budget.max_interpretations) {
    throw Error(ErrorCode::kBudgetExceeded,
                "too many interpretations to enumerate");
  }
  count_ = *count;
  for (const Existential& e : prefix.existentials) {
    current_.tables.emplace_back(std::size_t{1} << e.deps.size(), false);
  }
}

bool InterpretationEnumerator::Next(Interpretation& s) {
  if (emitted_ == count_) return false;
  if (emitted_ > 0) {
    // Binary increment, y_1's table first.
    for (auto& table : current_.tables) {
      bool carry = true;
      for (std::size_t b = 0; b < table.size() && carry; ++b) {
        carry = table[b];
        table[b] = !table[b];
      }
      if (!carry) break;
    }
  }
  ++emitted_;
  s = current_;
  return true;
}

std::vector<Interpretation> EnumerateInterpretations(
    const Prefix& prefix, const OracleBudget& budget) {
  InterpretationEnumerator it(prefix, budget);
  std::vector<Interpretation> out;
  out.reserve(it.count());
  Interpretation s;
  while (it.Next(s)) out.push_back(s);
  return out;
}

TruthResult BruteTruth(const Dqbf& dqbf, const OracleBudget& budget) {
  InterpretationEnumerator it(dqbf.prefix, budget);
  Interpretation s;
  while (it.Next(s)) {
    if (TruthValue(dqbf, s, budget.max_universals)) return {true, s};
  }
  return {false, std::nullopt};
}

namespace {

// Plain DPLL with unit propagation; literals are +/-(var + 1).
class Dpll {
 public:
  Dpll(std::size_t vars, std::vector<std::vector<int>> clauses,
       std::uint64_t max_decisions)
      : value_(vars, 0), clauses_(std::move(clauses)),
        max_decisions_(max_decisions) {}

  bool Solve() { return Search(); }
  bool value(std::size_t v) const { return value_[v] > 0; }

 private:
  int Eval(int lit) const {
    const int v = value_[std::abs(lit) - 1];
    return lit > 0 ? v : -v;
  }

  // Returns false on conflict. Assigned variables are pushed to `trail`.
  bool Propagate(std::vector<std::size_t>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : clauses_) {
        int unassigned = 0;
        int last = 0;
        bool sat = false;
        for (int lit : c) {
          const int e = Eval(lit);
          if (e > 0) {
            sat = true;
            break;
          }
          if (e == 0) {
            ++unassigned;
            last = lit;
          }
        }
        if (sat) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          const std::size_t v = std::abs(last) - 1;
          value_[v] = last > 0 ? 1 : -1;
          trail.push_back(v);
          changed = true;
        }
      }
    }
    return true;
  }

  bool Search() {
    std::vector<std::size_t> trail;
    if (!Propagate(trail)) {
      for (std::size_t v : trail) value_[v] = 0;
      return false;
    }
    const auto it = std::find(value_.begin(), value_.end(), 0);
    if (it == value_.end()) return true;
    if (++decisions_ > max_decisions_) {
      throw Error(ErrorCode::kBudgetExceeded, "expansion search too long");
    }
    const std::size_t v = static_cast<std::size_t>(it - value_.begin());
    for (int polarity : {-1, 1}) {
      value_[v] = static_cast<std::int8_t>(polarity);
      if (Search()) return true;
    }
    value_[v] = 0;
    for (std::size_t u : trail) value_[u] = 0;
    return false;
  }

  std::vector<std::int8_t> value_;
  std::vector<std::vector<int>> clauses_;
  std::uint64_t max_decisions_;
  std::uint64_t decisions_ = 0;
};

}  // namespace

TruthResult ExpansionTruth(const Dqbf& dqbf, const OracleBudget& budget) {
  const Prefix& prefix = dqbf.prefix;
  const std::size_t n = prefix.universals.size();
  if (n > budget.max_universals || n >= 63) {
    throw Error(ErrorCode::kBudgetExceeded, "too many universals to expand");
  }
  const QuantifierIndex index(prefix);
  const InducedAssignmentBuilder builder(prefix);
  std::vector<std::size_t> offset(prefix.existentials.size() + 1, 0);
  for (std::size_t i = 0; i < prefix.existentials.size(); ++i) {
    const std::size_t width = prefix.existentials[i].deps.size();
    if (width >= 30) {
      throw Error(ErrorCode::kBudgetExceeded, "dependency set too large");
    }
    offset[i + 1] = offset[i] + (std::size_t{1} << width);
  }

  std::vector<std::vector<int>> clauses;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const Assignment sigma{bits};
    for (const Clause& c : dqbf.matrix) {
      std::vector<int> inst;
      bool sat = false;
      for (const Literal& l : c) {
        const std::size_t p = index.position(l.var);
        if (index.is_universal(l.var)) {
          if (sigma.value_at(p) != l.negated) sat = true;
        } else {
          const int v = static_cast<int>(offset[p] + builder.TableIndex(p, sigma)) + 1;
          inst.push_back(l.negated ? -v : v);
        }
        if (sat) break;
      }
      if (sat) continue;
      std::sort(inst.begin(), inst.end());
      inst.erase(std::unique(inst.begin(), inst.end()), inst.end());
      const bool taut = std::any_of(inst.begin(), inst.end(), [&](int x) {
        return std::binary_search(inst.begin(), inst.end(), -x);
      });
      if (taut) continue;
      if (inst.empty()) return {false, std::nullopt};
      clauses.push_back(std::move(inst));
    }
  }
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());

  Dpll solver(offset.back(), std::move(clauses), budget.max_decisions);
  if (!solver.Solve()) return {false, std::nullopt};
  Interpretation s;
  for (std::size_t i = 0; i < prefix.existentials.size(); ++i) {
    std::vector<bool> table;
    for (std::size_t e = offset[i]; e < offset[i + 1]; ++e) {
      table.push_back(solver.value(e));
    }
    s.tables.push_back(std::move(table));
  }
  return {true, std::move(s)};
}

TruthResult DecideTruth(const Dqbf& dqbf, const OracleBudget& budget) {
  const auto count = InterpretationCount(dqbf.prefix);
  if (count && *count <= budget.enumerate_below) {
    return BruteTruth(dqbf, budget);
  }
  return ExpansionTruth(dqbf, budget);
}

namespace {

// Calls fn with every signed permutation of `vars` onto themselves.
void ForEachSignedPermutation(
    const std::vector<Var>& vars,
    const std::function<void(const std::vector<Literal>&)>& fn) {
  std::vector<Var> perm = vars;
  std::sort(perm.begin(), perm.end());
  const std::size_t m = vars.size();
  do {
    for (std::uint32_t signs = 0; signs < (1u << m); ++signs) {
      std::vector<Literal> images(m);
      for (std::size_t i = 0; i < m; ++i) {
        images[i] = Literal{perm[i], ((signs >> i) & 1) != 0};
      }
      fn(images);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

std::vector<LiteralPermutation> BruteSymmetries(const Dqbf& dqbf,
                                                std::size_t max_vars) {
  const std::size_t n = dqbf.var_count();
  if (n > max_vars) {
    throw Error(ErrorCode::kBudgetExceeded,
                "too many variables for exhaustive symmetry search");
  }
  std::vector<Var> xs = dqbf.prefix.universals;
  std::vector<Var> ys;
  for (const Existential& e : dqbf.prefix.existentials) ys.push_back(e.var);
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());

  std::set<LiteralPermutation> found;
  ForEachSignedPermutation(xs, [&](const std::vector<Literal>& x_images) {
    ForEachSignedPermutation(ys, [&](const std::vector<Literal>& y_images) {
      std::vector<Literal> images(n);
      for (std::size_t i = 0; i < xs.size(); ++i) images[xs[i] - 1] = x_images[i];
      for (std::size_t i = 0; i < ys.size(); ++i) images[ys[i] - 1] = y_images[i];
      const auto g = LiteralPermutation::FromImages(std::move(images));
      if (CheckAdmissible(dqbf.prefix, g) && CheckSyntactic(dqbf, g)) {
        found.insert(g);
      }
    });
  });
  return {found.begin(), found.end()};
}

Interpretation TransportInterpretation(const Prefix& prefix,
                                       const LiteralPermutation& g,
                                       const Interpretation& s) {
  const std::size_t n = prefix.universals.size();
  if (n >= 31) throw Error(ErrorCode::kBudgetExceeded, "too many universals");
  const QuantifierIndex index(prefix);
  const InducedAssignmentBuilder builder(prefix);
  const LiteralPermutation inverse = g.Inverse();

  Interpretation t;
  std::vector<std::vector<std::int8_t>> filled;
  for (const Existential& e : prefix.existentials) {
    t.tables.emplace_back(std::size_t{1} << e.deps.size(), false);
    filled.emplace_back(std::size_t{1} << e.deps.size(), 0);
  }
  FullAssignment sigma_full(prefix.var_count());
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const Assignment sigma{bits};
    // rho = g^-1(sigma): rho(x) is the value of g^-1(x) under sigma.
    for (std::size_t p = 0; p < n; ++p) {
      sigma_full.set(prefix.universals[p], sigma.value_at(p));
    }
    std::uint64_t rho_bits = 0;
    for (std::size_t p = 0; p < n; ++p) {
      const Literal pre = inverse(prefix.universals[p]);
      if (!index.is_universal(pre.var)) {
        throw Error(ErrorCode::kIllDefined, "permutation mixes quantifiers");
      }
      if (sigma_full.value(pre)) rho_bits |= std::uint64_t{1} << p;
    }
    const FullAssignment rho_s = builder.Build(s, Assignment{rho_bits});
    for (std::size_t i = 0; i < prefix.existentials.size(); ++i) {
      const bool value = rho_s.value(g(prefix.existentials[i].var));
      const std::size_t idx = builder.TableIndex(i, sigma);
      if (filled[i][idx] && t.tables[i][idx] != value) {
        throw Error(ErrorCode::kIllDefined,
                    "transported value is not a function of the dependencies");
      }
      filled[i][idx] = 1;
      t.tables[i][idx] = value;
    }
  }
  return t;
}

bool CheckTransport(const Dqbf& dqbf, const LiteralPermutation& g,
                const Interpretation& s) {
  Dqbf mapped = dqbf;
  mapped.matrix = ApplyToMatrix(dqbf.matrix, g);
  const Interpretation t = TransportInterpretation(dqbf.prefix, g, s);
  return TruthValue(mapped, s) == TruthValue(dqbf, t);
}

}  // namespace dqbreak
