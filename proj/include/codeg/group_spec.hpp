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

#ifndef CODEG_GROUP_SPEC_HPP_
#define CODEG_GROUP_SPEC_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "codeg/bignum.hpp"
#include "codeg/order_polynomial.hpp"

namespace codeg {

enum class LieFamily {
  kA,      // PSL_{n+1}(q)
  k2A,     // PSU_{n+1}(q), q names F_q (form over F_{q^2})
  kB,      // Omega_{2n+1}(q)
  kC,      // PSp_{2n}(q)
  kD,      // POmega^+_{2n}(q)
  k2D,     // POmega^-_{2n}(q)
  kG2,
  kF4,
  kE6,
  k2E6,
  kE7,
  kE8,
  k2B2,    // Suzuki, q = 2^{2m+1}
  k2G2,    // Ree, q = 3^{2m+1}
  k3D4,
  k2F4,    // Ree, q = 2^{2m+1}
};

// "A", "2A", ..., "3D4"; the strings used in data files and on the CLI.
std::string_view FamilyTag(LieFamily f);
// Throws UnsupportedFamily for unknown tags.
LieFamily ParseFamilyTag(std::string_view tag);
bool IsClassical(LieFamily f);
// Fixed rank label for exceptional and twisted exceptional families.
std::optional<unsigned> FixedRank(LieFamily f);

// A nonabelian finite simple group: either a group of Lie type over F_q or
// an alternating group. Construction validates the simplicity conditions.
class GroupSpec {
 public:
  static GroupSpec Lie(LieFamily family, unsigned rank, const BigInt& q);
  static GroupSpec Alternating(unsigned n);
  // Inverse of Name(): "C2(3)", "2A3(2)", "G2(4)", "A12".
  static GroupSpec Parse(std::string_view text);

  bool is_lie() const { return !alternating_; }
  bool is_alternating() const { return alternating_; }

  LieFamily family() const { return family_; }
  unsigned rank() const { return rank_; }
  const BigInt& q() const { return q_; }
  // Defining characteristic p and q = p^a.
  const BigInt& p() const { return p_; }
  unsigned long a() const { return a_; }
  unsigned degree() const { return rank_; }  // n for A_n

  // "C2(3)", "2A3(2)", "A12".
  std::string Name() const;

 private:
  GroupSpec() = default;

  bool alternating_ = false;
  LieFamily family_ = LieFamily::kA;
  unsigned rank_ = 0;
  BigInt q_, p_;
  unsigned long a_ = 0;
};

// Order of the universal (simply connected) version as a polynomial in q.
OrderPolynomial LieOrderPolynomial(LieFamily family, unsigned rank);

// |Z| of the universal version over the given q: gcd(n+1, q-1) for A_n, etc.
BigInt CenterSize(const GroupSpec& g);

// Order of the universal version (n!/2 for alternating groups, n <= 10^4).
BigInt UniversalOrder(const GroupSpec& g);
// Order of the simple group: UniversalOrder / CenterSize.
BigInt SimpleOrder(const GroupSpec& g);

inline constexpr unsigned kMaxExactAlternatingDegree = 10000;

}  // namespace codeg

#endif  // CODEG_GROUP_SPEC_HPP_
