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

#ifndef CODEG_CONJECTURE_HPP_
#define CODEG_CONJECTURE_HPP_

#include <optional>
#include <string>

#include "codeg/bignum.hpp"
#include "codeg/chartab.hpp"
#include "codeg/data_table.hpp"
#include "codeg/group_spec.hpp"
#include "codeg/report.hpp"

namespace codeg {

// p^x > n, exactly, without materializing p^x when it is obviously huge.
bool PowerExceeds(const BigInt& p, const BigInt& x, const BigInt& n);

// Verified iff p^{2d} > |H|_p. Throws InvalidArgument unless p is a prime
// dividing |H| and d >= 1.
VerificationReport CheckPropBra(const GroupSpec& h, const BigInt& p, const BigInt& d);

enum class PropTechCase { kSporadic, kAlternating, kCrossChar, kDefiningChar };
PropTechCase ParsePropTechCase(const std::string& s);
std::string PropTechCaseName(PropTechCase c);

// Desk-scale defaults; anything larger needs allow_large.
struct SweepOptions {
  unsigned max_rank = 8;
  BigInt max_q = 9;
  unsigned n_min = 11;
  unsigned n_max = 300;
  bool allow_large = false;
  // Restrict to one group (family + rank + q) when set.
  std::optional<GroupSpec> only;
};

inline constexpr unsigned kDefaultMaxRank = 8;
inline constexpr unsigned kDefaultMaxQ = 9;
inline constexpr unsigned kDefaultMaxN = 300;

VerificationReport VerifyPropTech(PropTechCase c, const SweepOptions& opts = {},
                                  const GroupData& data = GroupData::Default());

// No n in [10, n_max] with 2^{floor((n-2)/2) - 1} = n - 1.
VerificationReport CheckAlternatingBasicSpin(unsigned long n_max);

// Needs a table with a faithfulness column; verified iff some faithful
// character has degree prime to p.
VerificationReport CheckSplitExtensionClaim(const CharacterTable& t, const BigInt& p);

}  // namespace codeg

#endif  // CODEG_CONJECTURE_HPP_
