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

#include "dqbreak/pipeline.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "dqbreak/generators.hpp"
#include "dqbreak/oracle.hpp"
#include "test_util.hpp"

namespace dqbreak {
namespace {

std::set<LiteralPermutation> AsSet(const std::vector<LiteralPermutation>& v) {
  return {v.begin(), v.end()};
}

TEST(DetectTest, ExampleFive) {
  const Detection d = Detect(testing::E5());
  EXPECT_EQ(d.generators.size(), 1u);
  EXPECT_EQ(d.group.order, 2);
  EXPECT_EQ(d.eligible.size(), d.generators.size());
}

TEST(DetectTest, ExampleFourFlipIsIneligible) {
  const Dqbf f = testing::E4();
  const Detection d = Detect(f);
  const auto closure = GroupClosure(d.generators, f.var_count());
  bool found = false;
  for (const auto& g : closure) {
    if (g.IsIdentity()) continue;
    const EligibilityVerdict v = FilterEligible(d.sorted.prefix, g);
    if (g(Pos(5)) == Neg(5) && !g.Moves(4)) {
      found = true;
      EXPECT_FALSE(v.eligible);
      EXPECT_EQ(v.violated, Condition::kC3);
      EXPECT_EQ(v.witness, std::make_pair(std::size_t{2}, std::size_t{1}));
    }
  }
  EXPECT_TRUE(found);
}

TEST(DetectTest, SoundAndCompleteOnSmallFormulas) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const Dqbf f = RandomDqbf(testing::SuiteParams(seed, 2));
    const Detection d = Detect(f);
    for (const auto& g : d.generators) {
      EXPECT_TRUE(CheckAdmissible(f.prefix, g)) << seed;
      EXPECT_TRUE(CheckSyntactic(f, g)) << seed;
    }
    const auto closure = GroupClosure(d.generators, f.var_count());
    EXPECT_EQ(AsSet(closure), AsSet(BruteSymmetries(f))) << "seed " << seed;
    EXPECT_EQ(d.group.order, closure.size()) << seed;
    for (const auto& g : d.eligible) {
      EXPECT_TRUE(FilterEligible(d.sorted.prefix, g).eligible);
    }
  }
}

TEST(DetectTest, CraftedFamilyOrders) {
  for (std::size_t n : {1, 2, 5, 10, 20}) {
    EXPECT_EQ(Detect(Kbkf(n)).group.order, BigInt(1) << n) << n;
  }
  for (std::size_t n : {2, 3, 5, 10, 20}) {
    EXPECT_EQ(Detect(Parity(n)).group.order, BigInt(1) << (n + 1)) << n;
  }
}

TEST(DetectTest, DuplicateClausesDoNotInflateOrder) {
  const Dqbf f = testing::E5();
  std::vector<Clause> doubled = f.matrix;
  doubled.insert(doubled.end(), f.matrix.begin(), f.matrix.end());
  EXPECT_EQ(Detect(Dqbf::Make(f.prefix, doubled)).group.order,
            Detect(f).group.order);
}

TEST(BreakTest, PreservesTruth) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const Dqbf f = RandomDqbf(testing::SuiteParams(seed, 3));
    const BreakOutcome b = BreakSymmetries(f);
    EXPECT_EQ(DecideTruth(b.broken).value, DecideTruth(f).value) << seed;
    EXPECT_EQ(b.broken.var_count(), f.var_count() + b.artifact.fresh_vars.size());
  }
}

TEST(BreakTest, GeneratorCapIsHonoured) {
  const BreakOutcome b = BreakSymmetries(Kbkf(4), 2);
  EXPECT_EQ(b.artifact.used_generators.size(), 2u);
  EXPECT_FALSE(DecideTruth(b.broken).value);
}

TEST(BreakTest, CraftedFamiliesKeepTruth) {
  for (std::size_t n : {1, 2}) {
    EXPECT_FALSE(DecideTruth(BreakSymmetries(Kbkf(n)).broken).value);
  }
  for (std::size_t n : {2, 3}) {
    EXPECT_FALSE(DecideTruth(BreakSymmetries(Parity(n)).broken).value);
  }
}

}  // namespace
}  // namespace dqbreak
