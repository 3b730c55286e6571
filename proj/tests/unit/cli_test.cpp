// Copyright 2026 The codeg Authors
//
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

#include <gtest/gtest.h>

#include <sstream>

#include "codeg/cli.hpp"
#include "codeg/errors.hpp"
#include "codeg/report.hpp"
#include "test_support.hpp"

namespace codeg {
namespace {

using testing::Fixture;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, TableCodegrees) {
  const auto r = Invoke({"table", "cod", Fixture("a5.chartab")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{1,12,15,20}\n");
  EXPECT_EQ(r.err, "");
}

TEST(Cli, ExitCodesFollowVerdicts) {
  EXPECT_EQ(Invoke({"verify", "eq1", "--n", "3", "--q", "3"}).code, 0);
  EXPECT_EQ(Invoke({"verify", "cod-subset", Fixture("sl25.chartab"), Fixture("a5.chartab")}).code, 1);
  EXPECT_EQ(Invoke({"verify", "thm-e", Fixture("a5.chartab")}).code, 2);
  EXPECT_EQ(Invoke({"verify", "basic-spin", "--max-n", "9"}).code, 2);
}

TEST(Cli, ThmEWitness) {
  const auto r = Invoke({"verify", "thm-e", Fixture("sl25.chartab"), "--quotient-of-center"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verified"), std::string::npos);
  EXPECT_NE(r.out.find("degree 4"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"table"},
           {"table", "cod"},
           {"table", "cod", Fixture("a5.chartab"), "--bogus"},
           {"verify", "eq1", "--n", "x", "--q", "3"},
           {"verify", "eq1", "--n", "3", "--q", "4"},
           {"table", "cod", "/nonexistent.chartab"},
           {"orders", "group", "Q7(2)"},
       }) {
    const auto r = Invoke(args);
    EXPECT_EQ(r.code, kExitUsage) << (args.empty() ? "" : args[0]);
    EXPECT_FALSE(r.err.empty());
    EXPECT_TRUE(r.out.empty());
  }
  EXPECT_NE(Invoke({"frobnicate"}).err.find("Usage"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> cmd = {"verify", "prop-tech", "cross-char", "--json"};
  const auto a = Invoke(cmd), b = Invoke(cmd);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("generated"), std::string::npos);
  const auto t = Invoke({"verify", "e7", "--timestamps"});
  EXPECT_NE(t.out.find("generated: "), std::string::npos);
}

TEST(Cli, JsonDocument) {
  const auto r = Invoke({"verify", "eq1", "--n", "3", "--q", "5", "--json"});
  ASSERT_EQ(r.code, 0);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["schema"], kReportSchema);
  EXPECT_EQ(doc["report"]["claim"], "eq1");
  EXPECT_EQ(doc["report"]["verdict"], "verified");
  const Json cod = Json::parse(Invoke({"--json", "table", "cod", Fixture("a5.chartab")}).out);
  EXPECT_EQ(cod["result"]["codegrees"], Json::parse(R"(["1","12","15","20"])"));
}

TEST(Cli, HelpNamesTheClaim) {
  const auto r = Invoke({"verify", "eq1", "--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("GL_n^{+-}(q)"), std::string::npos);
  EXPECT_NE(Invoke({"verify", "prop-bra", "--help"}).out.find("p^{2d} > |H|_p"), std::string::npos);
  EXPECT_NE(Invoke({"verify", "basic-spin", "--help"}).out.find("2^{floor((n-2)/2)-1} = n-1"), std::string::npos);
}

TEST(Cli, NumbersInFullAndFactored) {
  const auto r = Invoke({"orders", "group", "E7(2)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("7997476042075799759100487262680802918400"), std::string::npos);
  EXPECT_NE(r.out.find("Phi18"), std::string::npos);
  EXPECT_EQ(Invoke({"lie", "spin-d", "--n", "3", "--q", "5"}).out.substr(0, 10), "D = 19656\n");
  EXPECT_EQ(Invoke({"cyclo", "phi", "12"}).out, "x^4 - x^2 + 1\n");
  EXPECT_EQ(Invoke({"cyclo", "zsigmondy", "--q", "2", "--n", "6"}).out.substr(0, 5), "none:");
  EXPECT_EQ(Invoke({"cyclo", "factor", "360"}).out, "2^3 * 3^2 * 5\n");
}

TEST(Report, RefutationNeedsWitness) {
  VerificationReport r = MakeReport("x", Verdict::kRefuted, "no");
  EXPECT_THROW(r.Validate(), InvariantViolation);
  r.witness["k"] = 1;
  EXPECT_NO_THROW(r.Validate());
  EXPECT_EQ(ExitCode(Verdict::kVerified), 0);
  EXPECT_EQ(ExitCode(Verdict::kRefuted), 1);
  EXPECT_EQ(ExitCode(Verdict::kInapplicable), 2);
  EXPECT_EQ(r.RenderText(), "[x] refuted\n  witness: {\"k\":1}\nno\n");
}

}  // namespace
}  // namespace codeg
