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

#include "dqbreak/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "dqbreak/dqdimacs.hpp"
#include "dqbreak/generators.hpp"
#include "dqbreak/oracle.hpp"
#include "test_util.hpp"

namespace dqbreak::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

bool HasLine(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dqbreak_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Tmp(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, DetectExampleFive) {
  const Result r = Call({"detect", testing::DataPath("corpus/e5.qdimacs")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(HasLine(r.out, "generators=1")) << r.out;
  EXPECT_TRUE(HasLine(r.out, "order=2")) << r.out;
}

TEST_F(CliTest, DetectListsIneligibleWitness) {
  const Result r =
      Call({"detect", "--list", testing::DataPath("corpus/e4.dqdimacs")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(HasLine(r.out, "eligible=0")) << r.out;
  EXPECT_NE(r.out.find("generator=(2 -2)(5 -5) C3(2,1)"), std::string::npos)
      << r.out;
}

TEST_F(CliTest, SolveExitCodes) {
  EXPECT_EQ(Call({"solve", testing::DataPath("corpus/e2.qdimacs")}).code,
            kExitFalse);
  const Result r = Call({"solve", testing::DataPath("corpus/e1.dqdimacs")});
  EXPECT_EQ(r.code, BruteTruth(testing::E1()).value ? kExitTrue : kExitFalse);
  EXPECT_TRUE(HasLine(r.out, r.code == kExitTrue ? "result=true" : "result=false"));
}

TEST_F(CliTest, StatsOnRigidFixtures) {
  const Result r = Call({"stats", testing::DataPath("rigid"), "-j", "2"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(HasLine(r.out, "le_1e0=5")) << r.out;
  EXPECT_TRUE(HasLine(r.out, "errors=0")) << r.out;
}

TEST_F(CliTest, StatsCountsParseErrors) {
  const Result r = Call({"stats", testing::DataPath("bad")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(HasLine(r.out, "errors=8")) << r.out;
}

TEST_F(CliTest, BreakKeepsTruth) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::string in = Tmp("in.dqdimacs");
    const std::string out = Tmp("out.dqdimacs");
    RandomParams p = testing::SuiteParams(seed, 3);
    p.plant_symmetry = true;
    WriteFile(in, RandomDqbf(p), SourceFormat::kDqdimacs);
    const Result b = Call({"break", in, "-o", out});
    ASSERT_EQ(b.code, kExitOk) << b.err;
    EXPECT_EQ(Call({"solve", out}).code, Call({"solve", in}).code) << seed;
  }
}

TEST_F(CliTest, BreakWritesQdimacsWhenLinear) {
  const std::string out = Tmp("kbkf.qdimacs");
  ASSERT_EQ(Call({"gen", "kbkf", "2", "-o", Tmp("k.dqdimacs")}).code, kExitOk);
  const Result r = Call({"break", Tmp("k.dqdimacs"), "-o", out});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(HasLine(r.out, "used=2")) << r.out;
  const ParseResult parsed = ParseFile(out);
  EXPECT_EQ(parsed.format, IsLinearizable(parsed.dqbf.prefix)
                               ? SourceFormat::kQdimacs
                               : SourceFormat::kDqdimacs);
  EXPECT_EQ(Call({"solve", out}).code, kExitFalse);
}

TEST_F(CliTest, GenMatchesLibrary) {
  ASSERT_EQ(Call({"gen", "parity", "3", "-o", Tmp("p.dqdimacs")}).code, kExitOk);
  EXPECT_EQ(ParseFile(Tmp("p.dqdimacs")).dqbf, Parity(3));
  ASSERT_EQ(Call({"gen", "random", "-o", Tmp("r.dqdimacs"), "--seed", "7",
                  "--universals", "2", "--existentials", "2", "--plant"})
                .code,
            kExitOk);
  RandomParams p;
  p.seed = 7;
  p.universals = 2;
  p.existentials = 2;
  p.plant_symmetry = true;
  EXPECT_EQ(ParseFile(Tmp("r.dqdimacs")).dqbf, RandomDqbf(p));
}

TEST_F(CliTest, UsageAndInputErrors) {
  EXPECT_EQ(Call({}).code, kExitUsage);
  EXPECT_EQ(Call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Call({"detect"}).code, kExitUsage);
  EXPECT_EQ(Call({"break", testing::DataPath("corpus/e5.qdimacs")}).code,
            kExitUsage);
  EXPECT_EQ(Call({"--help"}).code, kExitOk);
  const Result bad = Call({"detect", testing::DataPath("bad/no_header.qdimacs")});
  EXPECT_EQ(bad.code, kExitError);
  EXPECT_FALSE(bad.err.empty());
  EXPECT_EQ(Call({"detect", Tmp("missing.qdimacs")}).code, kExitError);
}

TEST_F(CliTest, NodeBudgetExhaustion) {
  ASSERT_EQ(Call({"gen", "kbkf", "6", "-o", Tmp("k.dqdimacs")}).code, kExitOk);
  EXPECT_EQ(Call({"detect", Tmp("k.dqdimacs"), "--node-limit", "1"}).code,
            kExitBudget);
}

TEST_F(CliTest, BinaryExitCode) {
  const std::string cmd = std::string(DQBREAK_CLI_PATH) + " solve " +
                          testing::DataPath("corpus/e2.qdimacs") + " > /dev/null";
  const int status = std::system(cmd.c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), kExitFalse);
}

}  // namespace
}  // namespace dqbreak::cli
