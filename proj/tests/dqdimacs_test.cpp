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

#include "dqbreak/dqdimacs.hpp"

#include <gtest/gtest.h>

#include <filesystem>

#include "dqbreak/error.hpp"
#include "test_util.hpp"

namespace dqbreak {
namespace {

using ::dqbreak::testing::DataPath;

ErrorCode CodeOf(const std::string& text) {
  try {
    ParseText(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorCode::kInternalInconsistency;
}

TEST(ParseTest, QdimacsBlocksGiveCumulativeDependencies) {
  const ParseResult r = ParseFile(DataPath("corpus/prenex.qdimacs"));
  EXPECT_EQ(r.format, SourceFormat::kQdimacs);
  const Prefix& p = r.dqbf.prefix;
  EXPECT_EQ(p.universals, (std::vector<Var>{2, 3, 5}));
  ASSERT_EQ(p.existentials.size(), 3u);
  EXPECT_EQ(p.existentials[0], (Existential{1, {}}));
  EXPECT_EQ(p.existentials[1], (Existential{4, {2, 3}}));
  EXPECT_EQ(p.existentials[2], (Existential{6, {2, 3, 5}}));
  // A clause may span lines.
  EXPECT_EQ(r.dqbf.matrix.back(), (Clause{Neg(2), Neg(5), Pos(6)}));
}

TEST(ParseTest, DependencyLinesAreExact) {
  const ParseResult r = ParseFile(DataPath("corpus/e1.dqdimacs"));
  EXPECT_EQ(r.format, SourceFormat::kDqdimacs);
  EXPECT_EQ(r.dqbf, testing::E1());
}

TEST(ParseTest, E5MatchesHandBuiltFormula) {
  EXPECT_EQ(ParseFile(DataPath("corpus/e5.qdimacs")).dqbf, testing::E5());
}

TEST(ParseTest, MixedLinesAndEmptyDependencySet) {
  const ParseResult r = ParseFile(DataPath("corpus/mixed.dqdimacs"));
  const Prefix& p = r.dqbf.prefix;
  EXPECT_EQ(p.existentials[0], (Existential{4, {1, 2, 3}}));
  EXPECT_EQ(p.existentials[3], (Existential{7, {}}));
}

TEST(ParseTest, UnquantifiedVariablesBecomeInnermostExistentials) {
  const ParseResult r = ParseFile(DataPath("corpus/unquantified.qdimacs"));
  ASSERT_EQ(r.dqbf.prefix.existentials.size(), 3u);
  EXPECT_EQ(r.dqbf.prefix.existentials[1], (Existential{3, {1}}));
  EXPECT_EQ(r.dqbf.prefix.existentials[2], (Existential{4, {1}}));
  EXPECT_EQ(r.warnings.size(), 2u);
}

TEST(ParseTest, ClauseCountMismatchIsOnlyAWarning) {
  const ParseResult r = ParseText("p cnf 1 3\ne 1 0\n1 0\n");
  EXPECT_EQ(r.dqbf.matrix.size(), 1u);
  EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(ParseTest, EmptyFormulaAndEmptyClause) {
  EXPECT_EQ(ParseFile(DataPath("corpus/empty.qdimacs")).dqbf.var_count(), 0u);
  const ParseResult r = ParseFile(DataPath("corpus/empty_clause.dqdimacs"));
  ASSERT_EQ(r.dqbf.matrix.size(), 1u);
  EXPECT_TRUE(r.dqbf.matrix[0].empty());
}

TEST(ParseTest, ErrorCodes) {
  EXPECT_EQ(CodeOf("1 2 0\n"), ErrorCode::kMalformedHeader);
  EXPECT_EQ(CodeOf(""), ErrorCode::kMalformedHeader);
  EXPECT_EQ(CodeOf("p dnf 1 1\n"), ErrorCode::kMalformedHeader);
  EXPECT_EQ(CodeOf("p cnf 2 1\na 1\ne 2 0\n"), ErrorCode::kBadTermination);
  EXPECT_EQ(CodeOf("p cnf 2 1\na 1 0\ne 1 0\n"),
            ErrorCode::kDuplicateQuantification);
  EXPECT_EQ(CodeOf("p cnf 2 1\na 1 0\ne 2 0\n1 3 0\n"),
            ErrorCode::kUndeclaredVariable);
  EXPECT_EQ(CodeOf("p cnf 2 1\na 1 0\nd 2 3 0\n"),
            ErrorCode::kUndeclaredVariable);
  EXPECT_EQ(CodeOf("p cnf 2 1\ne 1 0\nd 2 1 0\n"),
            ErrorCode::kUndeclaredVariable);
  EXPECT_EQ(CodeOf("p cnf 2 1\na 1 0\ne 2 0\n1 2\n"),
            ErrorCode::kBadTermination);
  EXPECT_EQ(CodeOf("p cnf 2 2\na 1 0\n1 2 0\ne 2 0\n"),
            ErrorCode::kMalformedLine);
  EXPECT_EQ(CodeOf("p cnf 2 1\na 1 0\ne 2 0\n1 x 0\n"),
            ErrorCode::kMalformedLine);
}

TEST(ParseTest, BadCorpusFilesAllFail) {
  for (const auto& entry :
       std::filesystem::directory_iterator(DataPath("bad"))) {
    EXPECT_THROW(ParseFile(entry.path()), Error) << entry.path();
  }
}

TEST(WriteTest, DqdimacsLayout) {
  EXPECT_EQ(WriteText(testing::E1(), SourceFormat::kDqdimacs),
            "p cnf 4 2\na 1 2 0\nd 3 1 0\nd 4 2 0\n1 3 0\n2 4 0\n");
}

TEST(WriteTest, QdimacsLayout) {
  EXPECT_EQ(WriteText(testing::E5(), SourceFormat::kQdimacs),
            "p cnf 3 3\na 1 2 0\ne 3 0\n1 2 3 0\n-1 -2 3 0\n1 2 -3 0\n");
  // Universals no existential depends on close the prefix.
  const Dqbf f = Dqbf::Make(Prefix{{1, 2}, {{3, {}}}}, {{Pos(3)}});
  EXPECT_EQ(WriteText(f, SourceFormat::kQdimacs),
            "p cnf 3 1\ne 3 0\na 1 2 0\n3 0\n");
}

TEST(WriteTest, IncomparableDependenciesAreNotPrenex) {
  EXPECT_FALSE(IsLinearizable(testing::E4().prefix));
  try {
    WriteText(testing::E4(), SourceFormat::kQdimacs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotLinearizable);
  }
}

TEST(RoundTripTest, CorpusIsAFixedPoint) {
  for (const auto& entry :
       std::filesystem::directory_iterator(DataPath("corpus"))) {
    const ParseResult first = ParseFile(entry.path());
    const ParseResult second = ParseText(WriteText(first.dqbf, first.format));
    EXPECT_EQ(second.dqbf, first.dqbf) << entry.path();
    EXPECT_EQ(second.format, first.format) << entry.path();
  }
}

TEST(RoundTripTest, DqdimacsAlwaysWorks) {
  for (const auto& entry :
       std::filesystem::directory_iterator(DataPath("corpus"))) {
    const Dqbf f = ParseFile(entry.path()).dqbf;
    EXPECT_EQ(ParseText(WriteText(f, SourceFormat::kDqdimacs)).dqbf, f);
  }
}

}  // namespace
}  // namespace dqbreak
