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

#include <cmath>
#include <complex>

#include "codeg/chartab.hpp"
#include "codeg/errors.hpp"
#include "test_support.hpp"

namespace codeg {
namespace {

using testing::AllFixtures;
using testing::Fixture;

CharacterTable Load(const std::string& name) { return CharacterTable::FromFile(Fixture(name)); }

std::set<BigInt> Set(std::initializer_list<long> v) {
  std::set<BigInt> s;
  for (long x : v) s.insert(x);
  return s;
}

TEST(CharacterTable, CodegreeSetsOfShippedTables) {
  EXPECT_EQ(Load("a5.chartab").Codegrees(), Set({1, 12, 15, 20}));
  EXPECT_EQ(Load("sl25.chartab").Codegrees(), Set({1, 12, 15, 20, 30, 60}));
  EXPECT_EQ(Load("psl27.chartab").Codegrees(), Set({1, 21, 24, 28, 56}));
  EXPECT_EQ(Load("sl27.chartab").Codegrees(), Set({1, 21, 24, 28, 42, 56, 84}));
  EXPECT_EQ(Load("a6.chartab").Codegrees(), Set({1, 36, 40, 45, 72}));
  EXPECT_EQ(Load("c2.chartab").Codegrees(), Set({1, 2}));
  EXPECT_EQ(Load("2e4a5.chartab").Codegrees(), Set({1, 12, 15, 20, 64}));
}

TEST(CharacterTable, PseudoAlgebraForgetsToCodegrees) {
  for (const auto& f : AllFixtures()) {
    const auto t = Load(f);
    const auto pa = t.PseudoAlgebra();
    EXPECT_EQ(pa.size(), t.characters().size()) << f;
    EXPECT_TRUE(std::is_sorted(pa.begin(), pa.end()));
    EXPECT_EQ(std::set<BigInt>(pa.begin(), pa.end()), t.Codegrees()) << f;
  }
  EXPECT_EQ(Load("a5.chartab").PseudoAlgebra(),
            (std::vector<BigInt>{1, 12, 15, 20, 20}));
}

// Kernels recomputed numerically: |chi(g) - chi(1)| tiny.
TEST(CharacterTable, CodegreesIntegralAndMatchFloatKernels) {
  for (const auto& f : AllFixtures()) {
    const auto t = Load(f);
    for (std::size_t i = 0; i < t.characters().size(); ++i) {
      const auto& c = t.characters()[i];
      BigInt kernel = 0;
      for (std::size_t k = 0; k < t.classes().size(); ++k) {
        if (std::abs(c.values[k].ToComplex() - c.degree.get_d()) < 1e-9) kernel += t.classes()[k].size;
      }
      EXPECT_EQ(t.KernelOrder(i), kernel) << f << " " << c.label;
      ASSERT_EQ(t.order() % (kernel * c.degree), 0) << f << " " << c.label;
      EXPECT_EQ(t.Codegree(i), t.order() / (kernel * c.degree));
    }
  }
}

TEST(CharacterTable, FirstOrthogonality) {
  for (const auto& f : AllFixtures()) {
    const auto t = Load(f);
    const std::size_t n = t.characters().size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(t.InnerProduct(i, j), BigRat(i == j ? 1 : 0)) << f << " " << i << " " << j;
        std::complex<double> s = 0;
        for (std::size_t k = 0; k < t.classes().size(); ++k) {
          s += t.classes()[k].size.get_d() * t.characters()[i].values[k].ToComplex() *
               std::conj(t.characters()[j].values[k].ToComplex());
        }
        EXPECT_NEAR(std::abs(s / t.order().get_d() - double(i == j)), 0.0, 1e-9);
      }
    }
  }
}

TEST(CharacterTable, SecondOrthogonality) {
  for (const auto& f : AllFixtures()) {
    const auto t = Load(f);
    for (std::size_t k = 0; k < t.classes().size(); ++k) {
      double s = 0;
      for (const auto& c : t.characters()) s += std::norm(c.values[k].ToComplex());
      EXPECT_NEAR(s, BigInt(t.order() / t.classes()[k].size).get_d(), 1e-7) << f << " " << k;
    }
  }
}

TEST(CharacterTable, CenterAndFaithfulness) {
  const auto sl = Load("sl25.chartab");
  EXPECT_EQ(sl.CenterOrder(), 2);
  EXPECT_EQ(sl.FaithfulCharacters().size(), 4u);
  EXPECT_EQ(sl.CharactersTrivialOn(sl.CenterClasses()).size(), 5u);
  EXPECT_EQ(Load("a5.chartab").CenterOrder(), 1);
  const auto ext = Load("2e4a5.chartab");
  ASSERT_TRUE(ext.has_faithful_flags());
  EXPECT_FALSE(sl.has_faithful_flags());
  for (std::size_t i = 0; i < ext.characters().size(); ++i) {
    EXPECT_EQ(*ext.characters()[i].faithful_flag, ext.KernelOrder(i) == 1);
  }
  EXPECT_EQ(ext.KernelOrder(*ext.FindCharacter("3a")), 16);
  EXPECT_FALSE(ext.FindCharacter("nope"));
}

TEST(CycloToken, Grammar) {
  EXPECT_EQ(ParseCycloToken("-3"), CycloValue(-3));
  EXPECT_EQ(ParseCycloToken("1/2"), CycloValue(BigRat(1, 2)));
  EXPECT_EQ(ParseCycloToken("z(4)"), CycloValue::RootOfUnity(4, 1));
  EXPECT_EQ(ParseCycloToken("-z(3)^2"), -CycloValue::RootOfUnity(3, 2));
  EXPECT_EQ(ParseCycloToken("1+2*z(5)^3-1/2*z(5)"),
            CycloValue(1) + CycloValue(2) * CycloValue::RootOfUnity(5, 3) -
                CycloValue(BigRat(1, 2)) * CycloValue::RootOfUnity(5, 1));
  // b7 = z + z^2 + z^4 satisfies b7^2 + b7 + 2 = 0
  const CycloValue b7 = ParseCycloToken("z(7)+z(7)^2+z(7)^4");
  EXPECT_TRUE((b7 * b7 + b7 + CycloValue(2)).IsZero());
  for (const char* bad : {"", "z(0)", "z(4", "2*", "z(4)^", "1//2", "x", "--1"}) {
    EXPECT_THROW(ParseCycloToken(bad), InvalidArgument) << bad;
  }
}

std::string Header() { return "CHARTAB 1\ngroup C2 order 2\nclass 1a 1\nclass 2a 1\n"; }

std::size_t ErrorLine(const std::string& text) {
  try {
    CharacterTable::Parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::string Violation(const std::string& text) {
  try {
    CharacterTable::Parse(text);
  } catch (const InvariantViolation& e) {
    return e.invariant();
  }
  return "";
}

TEST(CharacterTable, ParseErrors) {
  EXPECT_EQ(ErrorLine(""), 1u);
  EXPECT_EQ(ErrorLine("CHARTAB 2\n"), 1u);
  EXPECT_EQ(ErrorLine(Header() + "char 1 1 : 1\n"), 5u);
  EXPECT_EQ(ErrorLine(Header() + "char 1 1 : 1 1\nchar s 1 : 1 q\n"), 6u);
  EXPECT_EQ(ErrorLine(Header() + "char 1 1 1 1\n"), 5u);
  EXPECT_EQ(ErrorLine("CHARTAB 1\n# comment\n\nfoo bar\n"), 4u);
  EXPECT_EQ(ErrorLine(Header() + "char 1 1 maybe : 1 1\n"), 5u);
}

TEST(CharacterTable, InvariantViolations) {
  EXPECT_EQ(Violation("CHARTAB 1\ngroup C2 order 3\nclass 1a 1\nclass 2a 1\nchar 1 1 : 1 1\nchar s 1 : 1 -1\n"),
            "class sizes sum to the order");
  EXPECT_EQ(Violation("CHARTAB 1\ngroup C3 order 3\nclass 3a 2\nclass 1a 1\nchar 1 1 : 1 1\n"),
            "identity class first");
  EXPECT_EQ(Violation(Header() + "char 1 1 : 1 1\nchar s 2 : 1 -1\n"), "value at identity equals degree");
  EXPECT_EQ(Violation(Header() + "char 1 1 : 1 1\n"), "sum of squared degrees equals the order");
  EXPECT_EQ(Violation(Header() + "char 1 1 faithful : 1 1\nchar s 1 : 1 -1\n"), "faithfulness flags all or none");
}

TEST(ThmE, WitnessesOnCovers) {
  const auto r = VerifyThmEInstance(Load("sl25.chartab"));
  EXPECT_EQ(r.verdict, Verdict::kVerified);
  EXPECT_EQ(r.witness["degree"], "4");
  EXPECT_EQ(r.narrative, "faithful character 4f of degree 4: 4/2 = 2 is not in {1,3,4,5}");
  const auto r7 = VerifyThmEInstance(Load("sl27.chartab"));
  EXPECT_EQ(r7.verdict, Verdict::kVerified);
  EXPECT_EQ(r7.witness["degree"], "4");
  EXPECT_NE(r7.narrative.find("4/2 = 2 is not in {1,3,6,7,8}"), std::string::npos);
}

TEST(ThmE, TrivialCenterIsInapplicable) {
  for (const char* f : {"a5.chartab", "psl27.chartab", "a6.chartab"}) {
    EXPECT_EQ(VerifyThmEInstance(Load(f)).verdict, Verdict::kInapplicable) << f;
  }
}

TEST(CodegreeSubset, CoverIsNotContained) {
  const auto r = CodegreeSubset(Load("sl25.chartab"), Load("a5.chartab"));
  EXPECT_EQ(r.verdict, Verdict::kRefuted);
  EXPECT_EQ(r.witness["missing"], Json::parse(R"(["30","60"])"));
  EXPECT_EQ(CodegreeSubset(Load("a5.chartab"), Load("sl25.chartab")).verdict, Verdict::kVerified);
  EXPECT_EQ(CodegreeSubset(Load("psl27.chartab"), Load("sl27.chartab")).verdict, Verdict::kVerified);
}

TEST(ProjectiveBound, SL25OverCenter) {
  const auto t = Load("sl25.chartab");
  // faithful theta: characters over it have degrees 2, 2, 4, 6
  auto r = CheckProjectiveBound(t, {0, 1}, {CycloValue(1), CycloValue(-1)});
  EXPECT_EQ(r.verdict, Verdict::kVerified);
  r = CheckProjectiveBound(t, {0, 1}, {CycloValue(1), CycloValue(1)});
  EXPECT_EQ(r.verdict, Verdict::kVerified);
  // not a character of N
  EXPECT_EQ(CheckProjectiveBound(t, {0, 1}, {CycloValue(1), CycloValue(2)}).verdict, Verdict::kInapplicable);
  // 4a is not central
  EXPECT_EQ(CheckProjectiveBound(t, {0, 2}, {CycloValue(1), CycloValue(1)}).verdict, Verdict::kInapplicable);
}

}  // namespace
}  // namespace codeg
