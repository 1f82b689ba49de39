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

#ifndef DQBREAK_ORACLE_HPP_
#define DQBREAK_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dqbreak/formula.hpp"
#include "dqbreak/symmetry.hpp"

namespace dqbreak {

struct OracleBudget {
  std::uint64_t max_interpretations = std::uint64_t{1} << 20;
  std::size_t max_universals = 20;
  // Branching decisions of the expansion route.
  std::uint64_t max_decisions = 10'000'000;
  // DecideTruth enumerates only up to this many interpretations.
  std::uint64_t enumerate_below = 4096;
};

// Number of interpretations of the prefix, or nullopt past 2^63.
std::optional<std::uint64_t> InterpretationCount(const Prefix& prefix);

// Visits every interpretation once. The tables form one binary counter with
// entry 0 of y_1's table as the least significant bit.
class InterpretationEnumerator {
 public:
  // Throws kBudgetExceeded above budget.max_interpretations.
  InterpretationEnumerator(const Prefix& prefix,
                           const OracleBudget& budget = {});

  std::uint64_t count() const { return count_; }
  // Fills `s` with the next interpretation; false once all are visited.
  bool Next(Interpretation& s);

 private:
  Interpretation current_;
  std::uint64_t count_ = 0;
  std::uint64_t emitted_ = 0;
};

std::vector<Interpretation> EnumerateInterpretations(
    const Prefix& prefix, const OracleBudget& budget = {});

struct TruthResult {
  bool value = false;
  std::optional<Interpretation> witness;
};

// Enumerates interpretations until a model turns up.
TruthResult BruteTruth(const Dqbf& dqbf, const OracleBudget& budget = {});

// Universal expansion: one propositional variable per Skolem table entry,
// one clause instance per universal assignment, decided by DPLL.
TruthResult ExpansionTruth(const Dqbf& dqbf, const OracleBudget& budget = {});

// BruteTruth when there are at most budget.enumerate_below
// interpretations, otherwise ExpansionTruth.
TruthResult DecideTruth(const Dqbf& dqbf, const OracleBudget& budget = {});

// Every quantifier-preserving signed permutation of the variables that is
// admissible and fixes the clause multiset, sorted. Throws kBudgetExceeded
// when there are more than max_vars variables.
std::vector<LiteralPermutation> BruteSymmetries(const Dqbf& dqbf,
                                                std::size_t max_vars = 6);

// The interpretation t with sigma_t = g(g^-1(sigma)_s) for every universal
// assignment sigma, where g(tau)(v) is the value of g(v) under tau. Throws
// kIllDefined if that is not a function of each D_i.
Interpretation TransportInterpretation(const Prefix& prefix,
                                       const LiteralPermutation& g,
                                       const Interpretation& s);

// Truth of P.g(phi) under s equals truth of P.phi under the transported s.
bool CheckTransport(const Dqbf& dqbf, const LiteralPermutation& g,
                const Interpretation& s);

}  // namespace dqbreak

#endif  // DQBREAK_ORACLE_HPP_
