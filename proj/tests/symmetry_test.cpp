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

#include "dqbreak/symmetry.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "dqbreak/autom.hpp"
#include "dqbreak/error.hpp"
#include "test_util.hpp"

namespace dqbreak {
namespace {

LiteralPermutation Make(std::vector<Literal> images) {
  return LiteralPermutation::FromImages(std::move(images));
}

// E1 and E3 share the formula; x1 x2 y1 y2.
const LiteralPermutation kSwap = Make({Pos(2), Pos(1), Pos(4), Pos(3)});

TEST(LiteralPermutationTest, NegationCompatibleByConstruction) {
  const auto g = Make({Neg(2), Pos(1)});
  EXPECT_EQ(g(Pos(1)), Neg(2));
  EXPECT_EQ(g(Neg(1)), Pos(2));
  EXPECT_EQ(g(Neg(2)), Neg(1));
  EXPECT_EQ(g.ToString(), "(1 -2 -1 2)");
  EXPECT_EQ(kSwap.ToString(), "(1 2)(3 4)");
  EXPECT_EQ(Make({Neg(1)}).ToString(), "(1 -1)");
  EXPECT_EQ(LiteralPermutation::Identity(3).ToString(), "()");
  EXPECT_THROW(Make({Pos(1), Pos(1)}), Error);
}

TEST(LiteralPermutationTest, ComposeAndInverse) {
  const auto g = Make({Neg(2), Pos(1), Pos(3)});
  EXPECT_TRUE(g.Then(g.Inverse()).IsIdentity());
  EXPECT_TRUE(g.Inverse().Then(g).IsIdentity());
  // Order 4: 1 -> -2 -> -1 -> 2 -> 1.
  EXPECT_FALSE(g.Then(g).IsIdentity());
  EXPECT_TRUE(g.Then(g).Then(g).Then(g).IsIdentity());
  EXPECT_EQ(g.Then(LiteralPermutation::Identity(3)), g);
}

TEST(ExtractTest, E5AutomorphismIsTheVariableSwap) {
  const FormulaGraph fg = BuildGraph(testing::E5());
  const GroupReport r = FindAutomorphisms(fg.graph);
  ASSERT_EQ(r.generators.size(), 1u);
  const auto g = ExtractLiteralPermutation(r.generators[0], fg.layout);
  EXPECT_EQ(g, Make({Pos(2), Pos(1), Pos(3)}));
}

TEST(ExtractTest, IdentityAndFlip) {
  const FormulaGraph fg = BuildGraph(testing::E2());
  EXPECT_TRUE(
      ExtractLiteralPermutation(IdentityPerm(fg.graph.vertex_count()), fg.layout)
          .IsIdentity());
  // Swap +x and -x nodes only.
  Perm flip = IdentityPerm(fg.graph.vertex_count());
  std::swap(flip[fg.layout.LiteralNode(Pos(1))], flip[fg.layout.LiteralNode(Neg(1))]);
  EXPECT_EQ(ExtractLiteralPermutation(flip, fg.layout), Make({Neg(1), Pos(2)}));
}

TEST(ExtractTest, RejectsMapsLeavingLiteralNodes) {
  const FormulaGraph fg = BuildGraph(testing::E2());
  Perm bad = IdentityPerm(fg.graph.vertex_count());
  std::swap(bad[fg.layout.LiteralNode(Pos(1))], bad[fg.layout.VarNode(1)]);
  try {
    ExtractLiteralPermutation(bad, fg.layout);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInternalInconsistency);
  }
}

TEST(AdmissibleTest, SwapOfPairsButNotOfExistentialsAlone) {
  const Prefix p = testing::E1().prefix;
  EXPECT_TRUE(CheckAdmissible(p, kSwap));
  EXPECT_FALSE(CheckAdmissible(p, Make({Pos(1), Pos(2), Pos(4), Pos(3)})));
  EXPECT_TRUE(CheckAdmissible(p, LiteralPermutation::Identity(4)));
  // Universal onto existential.
  EXPECT_FALSE(CheckAdmissible(p, Make({Pos(3), Pos(2), Pos(1), Pos(4)})));
}

TEST(SyntacticTest, E5) {
  const Dqbf f = testing::E5();
  EXPECT_TRUE(CheckSyntactic(f, Make({Pos(2), Pos(1), Pos(3)})));
  EXPECT_FALSE(CheckSyntactic(f, Make({Neg(1), Pos(2), Pos(3)})));
  EXPECT_TRUE(CheckSyntactic(f, LiteralPermutation::Identity(3)));
}

TEST(SyntacticTest, ClauseMultiplicityIsIgnored) {
  const Prefix p{{1, 2}, {{3, {1, 2}}}};
  const Dqbf f = Dqbf::Make(p, {{Pos(1)}, {Pos(1)}, {Pos(2)}});
  EXPECT_TRUE(CheckSyntactic(f, Make({Pos(2), Pos(1), Pos(3)})));
  EXPECT_FALSE(CheckSyntactic(f, Make({Neg(1), Pos(2), Pos(3)})));
}

TEST(EligibilityTest, E4FlipViolatesC3) {
  const auto g = Make({Pos(1), Neg(2), Pos(3), Pos(4), Neg(5)});
  const Dqbf f = testing::E4();
  EXPECT_TRUE(CheckAdmissible(f.prefix, g));
  EXPECT_TRUE(CheckSyntactic(f, g));
  const EligibilityVerdict v = FilterEligible(f.prefix, g);
  EXPECT_FALSE(v.eligible);
  EXPECT_EQ(v.violated, Condition::kC3);
  EXPECT_EQ(v.witness, std::make_pair(std::size_t{2}, std::size_t{1}));
}

TEST(EligibilityTest, E3SwapViolatesC1) {
  const EligibilityVerdict v = FilterEligible(testing::E1().prefix, kSwap);
  EXPECT_FALSE(v.eligible);
  EXPECT_EQ(v.violated, Condition::kC1);
  EXPECT_EQ(v.witness, std::make_pair(std::size_t{1}, std::size_t{1}));
}

TEST(EligibilityTest, C2NeedsEqualDependencySets) {
  const Prefix p{{1}, {{2, {}}, {3, {1}}}};
  const auto g = Make({Pos(1), Pos(3), Pos(2)});
  const EligibilityVerdict v = FilterEligible(p, g);
  EXPECT_EQ(v.violated, Condition::kC2);
  const Prefix same{{1}, {{2, {1}}, {3, {1}}}};
  EXPECT_TRUE(FilterEligible(same, g).eligible);
}

TEST(EligibilityTest, IdentityAlwaysEligible) {
  for (const Dqbf& f : {testing::E1(), testing::E2(), testing::E4(), testing::E5()}) {
    const EligibilityVerdict v =
        FilterEligible(f.prefix, LiteralPermutation::Identity(f.var_count()));
    EXPECT_TRUE(v.eligible);
    EXPECT_FALSE(v.violated.has_value());
  }
}

TEST(EligibilityTest, UnsortedPrefixRejected) {
  const Prefix p{{1}, {{2, {1}}, {3, {}}}};
  EXPECT_THROW(FilterEligible(p, LiteralPermutation::Identity(3)), Error);
}

TEST(ClosureTest, GroupElements) {
  const auto g = Make({Neg(2), Pos(1), Pos(3)});
  EXPECT_EQ(GroupClosure({g}, 3).size(), 4u);
  EXPECT_EQ(GroupClosure({}, 3).size(), 1u);
  EXPECT_EQ(GroupClosure({g, Make({Pos(1), Pos(2), Neg(3)})}, 3).size(), 8u);
}

}  // namespace
}  // namespace dqbreak
