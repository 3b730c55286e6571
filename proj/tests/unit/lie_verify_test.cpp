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

#include <algorithm>

#include "codeg/errors.hpp"
#include "codeg/group_spec.hpp"
#include "codeg/lie_verify.hpp"
#include "codeg/number_theory.hpp"
#include "test_support.hpp"

namespace codeg {
namespace {

using testing::NaivePow;

std::string ParamOf(const VerificationReport& r, const std::string& key) {
  for (const auto& [k, v] : r.params) {
    if (k == key) return v;
  }
  return "";
}

TEST(SemisimpleDegree, E7Identity) {
  const OrderPolynomial got = SemisimpleDegree(E7Datum());
  EXPECT_EQ(got, E7ExpectedDegree());
  EXPECT_EQ(got.ToString(), "1/2 * Phi1^3 * Phi3^2 * Phi5 * Phi6 * Phi7 * Phi9 * Phi12 * Phi18");
  // doubling clears the scalar
  EXPECT_EQ(got.WithScalar(got.scalar() * 2).scalar(), 1);
}

// The E7 involution centralizer is 2 x |2A7(q)|: 2 q^28 prod_{i=2}^8 (q^i - (-1)^i).
TEST(SemisimpleDegree, E7CentralizerIsTwiceUnitaryOrder) {
  for (long q : {2, 3, 4, 5, 7, 9}) {
    BigInt c = 2 * NaivePow(q, 28);
    for (unsigned i = 2; i <= 8; ++i) c *= NaivePow(q, i) - (i % 2 == 0 ? 1 : -1);
    EXPECT_EQ(E7InvolutionCentralizer().EvaluateInteger(q), c) << q;
  }
}

TEST(SemisimpleDegree, E7AtFiveMatchesIntegerIndex) {
  const long q = 5;
  BigInt e7 = NaivePow(q, 63);
  for (unsigned d : {2, 6, 8, 10, 12, 14, 18}) e7 *= NaivePow(q, d) - 1;
  BigInt c = 2 * NaivePow(q, 28);
  for (unsigned i = 2; i <= 8; ++i) c *= NaivePow(q, i) - (i % 2 == 0 ? 1 : -1);
  ASSERT_EQ(e7 % c, 0);
  const BigInt index = PPrimePart(e7 / c, 5);
  EXPECT_EQ(SemisimpleDegreeAt(E7Datum(), q), index);
  EXPECT_EQ(SemisimpleDegree(E7Datum()).Evaluate(q), BigRat(index));
}

TEST(SemisimpleDegree, TrivialAndCoherent) {
  const OrderPolynomial a = LieOrderPolynomial(LieFamily::kC, 3);
  EXPECT_EQ(SemisimpleDegree({a, a, 2}), OrderPolynomial::Constant(2));
  for (long q : {3, 5, 7, 9}) EXPECT_EQ(SemisimpleDegree(E7Datum()).Evaluate(q), BigRat(SemisimpleDegreeAt(E7Datum(), q)));
  // An element of order 3 is semisimple only when 3 does not divide q.
  for (long q : {4, 5, 7, 8}) {
    for (const auto& d : {E6Datum(), TwistedE6Datum()}) {
      EXPECT_EQ(SemisimpleDegree(d).Evaluate(q), BigRat(SemisimpleDegreeAt(d, q)));
    }
  }
  EXPECT_THROW(SemisimpleDegreeAt(E6Datum(), 3), NonExactQuotient);
  EXPECT_THROW(SemisimpleDegree({OrderPolynomial::Phi(1), OrderPolynomial::Phi(2), 1}), NonExactQuotient);
}

TEST(SpinD, KnownValues) {
  EXPECT_EQ(SpinD(3, 5, 1).d, 19656);
  EXPECT_EQ(SpinD(3, 3, -1).d, 520);
  EXPECT_EQ(SpinD(3, 3, -1).half, 260);
  EXPECT_EQ(SpinD(3, 3, -1).quarter, BigInt(130));
  EXPECT_THROW(SpinD(3, 4, 1), InvalidArgument);
  EXPECT_THROW(SpinD(2, 3, 1), InvalidArgument);
  EXPECT_THROW(SpinD(3, 3, 0), InvalidArgument);
}

TEST(SpinD, IdentityAndCoherence) {
  for (unsigned n = 3; n <= 8; ++n) {
    for (int eps : {1, -1}) {
      const OrderPolynomial sym = SpinDSymbolic(n, eps);
      for (const auto& [i, e] : sym.cyclo_exponents()) EXPECT_GT(e, 0);
      for (long q : {3, 5, 7, 9}) {
        const BigInt d = SpinD(n, q, eps).d;
        BigInt lhs = d, rhs = 1, plus = 1;
        for (unsigned i = 1; i <= n; ++i) {
          const BigInt ei = (eps == -1 && i % 2 == 1) ? -1 : 1;
          lhs *= NaivePow(q, i) - ei;
          rhs *= NaivePow(q, 2 * i) - 1;
          plus *= NaivePow(q, i) + ei;
        }
        EXPECT_EQ(lhs, rhs);
        EXPECT_EQ(d, plus);
        EXPECT_EQ(sym.EvaluateInteger(q), d);
        EXPECT_EQ(SpinD(n, q, eps).half * 2, d);
      }
    }
  }
}

// Multisets of (a, k, sign) with sum a*k = r: there are 2 d(w) types of
// weight w. Counted by the product of 1/(1 - x^w)^{2 d(w)}.
std::vector<BigInt> FactorMultisets(unsigned n) {
  std::vector<BigInt> p(n + 1, 0);
  p[0] = 1;
  for (unsigned w = 1; w <= n; ++w) {
    unsigned divisors = 0;
    for (unsigned d = 1; d <= w; ++d) divisors += w % d == 0;
    for (unsigned t = 0; t < 2 * divisors; ++t) {
      for (unsigned r = w; r <= n; ++r) p[r] += p[r - w];
    }
  }
  return p;
}

TEST(Centralizers, CountsMatchGeneratingFunction) {
  for (unsigned n = 2; n <= 6; ++n) {
    const auto p = FactorMultisets(n);
    BigInt split = 0, twisted = 0;
    for (unsigned m = 0; m <= n; ++m) {
      split += (m + 1) * p[n - m];
      if (m % 2 == 0) twisted += p[n - m];
    }
    const auto all = EnumerateSymplecticCentralizers(n, 3);
    const auto s = std::count_if(all.begin(), all.end(), [](const auto& e) {
      return e.descriptor.kind == CentralizerDescriptor::Kind::kSplit;
    });
    EXPECT_EQ(BigInt(s), split) << n;
    EXPECT_EQ(BigInt(static_cast<long>(all.size()) - s), twisted) << n;
  }
}

TEST(Centralizers, SmallCaseExamples) {
  const auto all = EnumerateSymplecticCentralizers(2, 3);
  auto find = [&](const std::string& enc) -> const EnumeratedCentralizer* {
    for (const auto& e : all) {
      if (e.descriptor.Encode() == enc) return &e;
    }
    return nullptr;
  };
  const auto* full = find("split k=2 m=2 []");
  ASSERT_NE(full, nullptr);
  EXPECT_EQ(full->p_prime_order, 51840 / 81);
  const auto* gu = find("split k=0 m=0 [1,2,-]");
  ASSERT_NE(gu, nullptr);
  EXPECT_EQ(gu->p_prime_order, 10);
  EXPECT_EQ(gu->descriptor.ToString(), "GU1(q^2)");
  EXPECT_THROW(EnumerateSymplecticCentralizers(1, 3), InvalidArgument);
  EXPECT_THROW(EnumerateSymplecticCentralizers(9, 3), InvalidArgument);
  EXPECT_THROW(EnumerateSymplecticCentralizers(3, 4), InvalidArgument);
}

TEST(Centralizers, CanonicalOrderAndDivisibility) {
  for (unsigned n = 2; n <= 5; ++n) {
    for (long q : {3, 5}) {
      const auto all = EnumerateSymplecticCentralizers(n, q);
      const BigInt sp = SymplecticOrder(n).EvaluateInteger(q);
      bool has_full = false;
      for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& e = all[i];
        if (i > 0) {
          EXPECT_TRUE(all[i - 1].descriptor < e.descriptor);
        }
        const BigInt order = e.descriptor.OrderAt(q);
        EXPECT_EQ(sp % order, 0) << e.descriptor.Encode();
        EXPECT_EQ(e.descriptor.Order().EvaluateInteger(q), order);
        EXPECT_EQ(e.p_prime_order, PPrimePart(order, PrimePowerDecomposition(BigInt(q))->first));
        if (e.descriptor.kind == CentralizerDescriptor::Kind::kSplit && e.descriptor.k == n && e.descriptor.m == n) {
          has_full = true;
          EXPECT_EQ(e.p_prime_order, PPrimePart(sp, q));
        }
      }
      EXPECT_TRUE(has_full);
    }
  }
}

TEST(Centralizers, GroupOrderFormulas) {
  // |GU_2(Q)| = Q (Q^2 - 1)(Q + 1)
  for (long q : {2, 3, 5}) {
    EXPECT_EQ(GLOrder(2, 1, -1).EvaluateInteger(q), q * (q * q - 1) * (q + 1));
    EXPECT_EQ(GLOrder(2, 2, 1).EvaluateInteger(q), NaivePow(q, 2) * (NaivePow(q, 4) - 1) * (NaivePow(q, 2) - 1));
    EXPECT_EQ(SymplecticOrder(1, 2).EvaluateInteger(q), NaivePow(q, 2) * (NaivePow(q, 4) - 1));
  }
}

TEST(Eq1, NoSolutionOnAcceptanceGrid) {
  for (unsigned n : {3, 4, 5}) {
    for (long q : {3, 5}) {
      const auto r = VerifyEq1NoSolution(n, q);
      EXPECT_EQ(r.verdict, Verdict::kVerified) << n << " " << q;
      EXPECT_TRUE(r.witness.is_null());
    }
  }
  const auto r = VerifyEq1NoSolution(3, 3);
  EXPECT_EQ(ParamOf(r, "split_descriptors"), "40");
  EXPECT_EQ(ParamOf(r, "twisted_descriptors"), "18");
  EXPECT_EQ(ParamOf(VerifyEq1NoSolution(4, 3), "split_descriptors"), "107");
  EXPECT_EQ(ParamOf(VerifyEq1NoSolution(5, 5), "twisted_descriptors"), "104");
  EXPECT_THROW(VerifyEq1NoSolution(2, 3), InvalidArgument);
}

TEST(Weil, Degrees) {
  EXPECT_EQ(WeilDegrees(WeilFamily::kSp, 3, 3), (std::vector<BigInt>{13, 14}));
  EXPECT_EQ(WeilDegrees(WeilFamily::kSU, 4, 3), (std::vector<BigInt>{20}));
  EXPECT_EQ(WeilDegrees(WeilFamily::kSL, 3, 2), (std::vector<BigInt>{7}));
  EXPECT_THROW(WeilDegrees(WeilFamily::kSp, 3, 4), InvalidArgument);
  EXPECT_THROW(WeilDegrees(WeilFamily::kSL, 1, 4), InvalidArgument);
  EXPECT_EQ(ParseWeilFamily("SU"), WeilFamily::kSU);
  EXPECT_THROW(ParseWeilFamily("GL"), InvalidArgument);
}

TEST(Weil, BelowMinimalDegree) {
  auto r = CheckWeilBelowMinDegree(WeilFamily::kSp, 3, 3);
  EXPECT_EQ(r.verdict, Verdict::kVerified);
  EXPECT_EQ(ParamOf(r, "min_degree_bound"), "13");
  r = CheckWeilBelowMinDegree(WeilFamily::kSp, 2, 5);
  EXPECT_EQ(r.verdict, Verdict::kVerified);
  EXPECT_EQ(ParamOf(r, "min_degree_bound"), "12");
  r = CheckWeilBelowMinDegree(WeilFamily::kSU, 4, 3);
  EXPECT_EQ(r.verdict, Verdict::kVerified);
  EXPECT_EQ(ParamOf(r, "min_degree_bound"), "20");
  EXPECT_EQ(CheckWeilBelowMinDegree(WeilFamily::kSL, 3, 2).verdict, Verdict::kInapplicable);
}

}  // namespace
}  // namespace codeg
