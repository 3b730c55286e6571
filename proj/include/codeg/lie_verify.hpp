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

#ifndef CODEG_LIE_VERIFY_HPP_
#define CODEG_LIE_VERIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "codeg/bignum.hpp"
#include "codeg/order_polynomial.hpp"
#include "codeg/report.hpp"

namespace codeg {

// chi(1) = |G* : C_{G*}(s)|_{p'} * psi(1).
struct SemisimpleDatum {
  OrderPolynomial ambient;
  OrderPolynomial centralizer;
  BigInt unipotent_degree = 1;
};

// Throws NonExactQuotient when the centralizer does not divide the ambient.
OrderPolynomial SemisimpleDegree(const SemisimpleDatum& d);
// Same quantity at a specific q computed from integers only.
BigInt SemisimpleDegreeAt(const SemisimpleDatum& d, const BigInt& q);

// Involution centralizer 2A7(q).2 in E7(q)_ad and the resulting degree.
OrderPolynomial E7InvolutionCentralizer();
OrderPolynomial E7ExpectedDegree();
SemisimpleDatum E7Datum();
// Order-3 centralizers A2(q^3).3 in E6(q)_ad and 2A2(q^3).3 in 2E6(q)_ad.
OrderPolynomial E6CentralizerA2Q3();
OrderPolynomial TwistedE6Centralizer2A2Q3();
SemisimpleDatum E6Datum();
SemisimpleDatum TwistedE6Datum();

// D = prod_{i<=n} (q^{2i}-1) / prod_{i<=n} (q^i - eps^i) for odd q, n >= 3.
struct SpinDResult {
  BigInt d;
  BigInt half;                    // the semisimple degree D/2
  std::optional<BigInt> quarter;  // D/4 when integral
};
SpinDResult SpinD(unsigned n, const BigInt& q, int eps);
OrderPolynomial SpinDSymbolic(unsigned n, int eps);

// GL^sign_a(q^k); sign +1 is GL, -1 is GU.
struct GLFactor {
  unsigned a;
  unsigned k;
  int sign;
  friend auto operator<=>(const GLFactor&, const GLFactor&) = default;
};

// A centralizer shape in Sp_{2n}(q):
//   split:   Sp_{2k}(q) x Sp_{2(m-k)}(q) x prod GL^{sign}_a(q^k), 0 <= k <= m
//   twisted: Sp_m(q^2) x prod GL^{sign}_a(q^k), m even
// with sum a_i k_i = n - m in both cases.
struct CentralizerDescriptor {
  enum class Kind { kSplit, kTwisted };
  Kind kind = Kind::kSplit;
  unsigned k = 0;
  unsigned m = 0;
  std::vector<GLFactor> factors;  // sorted

  // Canonical key, e.g. "split k=1 m=2 [1,1,+][1,2,-]".
  std::string Encode() const;
  // Group notation, e.g. "Sp2(q) x Sp2(q) x GU1(q^2)".
  std::string ToString() const;
  OrderPolynomial Order() const;
  BigInt OrderAt(const BigInt& q) const;

  friend bool operator<(const CentralizerDescriptor& x, const CentralizerDescriptor& y);
  friend bool operator==(const CentralizerDescriptor& x, const CentralizerDescriptor& y);
};

struct EnumeratedCentralizer {
  CentralizerDescriptor descriptor;
  BigInt p_prime_order;
};

// All descriptors of both kinds for Sp_{2n}(q), 2 <= n <= 8, q odd, in
// canonical order.
std::vector<EnumeratedCentralizer> EnumerateSymplecticCentralizers(unsigned n, const BigInt& q);

// |Sp_{2r}(Q)|, |GL_a(Q)|, |GU_a(Q)| with Q = q^k as order polynomials in q.
OrderPolynomial SymplecticOrder(unsigned r, unsigned k = 1);
OrderPolynomial GLOrder(unsigned a, unsigned k, int sign);

// No centralizer has p'-order c * |GL^{+-}_n(q)|_{p'} with c in {2,4,8}.
VerificationReport VerifyEq1NoSolution(unsigned n, const BigInt& q);

enum class WeilFamily { kSp, kSL, kSU };
WeilFamily ParseWeilFamily(const std::string& s);
std::string WeilFamilyName(WeilFamily f);
std::vector<BigInt> WeilDegrees(WeilFamily f, unsigned n, const BigInt& q);
// Each Weil degree divided by each prime r dividing the center of the
// quasisimple cover must fall strictly below the smallest projective degree
// of the simple quotient (non-integral quotients pass outright).
VerificationReport CheckWeilBelowMinDegree(WeilFamily f, unsigned n, const BigInt& q);

}  // namespace codeg

#endif  // CODEG_LIE_VERIFY_HPP_
