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

#include "codeg/group_spec.hpp"

#include <array>
#include <utility>

#include "codeg/errors.hpp"
#include "codeg/number_theory.hpp"

namespace codeg {

namespace {

constexpr std::array<std::pair<LieFamily, std::string_view>, 16> kTags = {{
    {LieFamily::kA, "A"},     {LieFamily::k2A, "2A"},   {LieFamily::kB, "B"},
    {LieFamily::kC, "C"},     {LieFamily::kD, "D"},     {LieFamily::k2D, "2D"},
    {LieFamily::kG2, "G2"},   {LieFamily::kF4, "F4"},   {LieFamily::kE6, "E6"},
    {LieFamily::k2E6, "2E6"}, {LieFamily::kE7, "E7"},   {LieFamily::kE8, "E8"},
    {LieFamily::k2B2, "2B2"}, {LieFamily::k2G2, "2G2"}, {LieFamily::k3D4, "3D4"},
    {LieFamily::k2F4, "2F4"},
}};

bool IsOddPowerOf(const BigInt& p, unsigned long a, unsigned long prime) {
  return p == prime && a % 2 == 1;
}

}  // namespace

std::string_view FamilyTag(LieFamily f) {
  for (const auto& [fam, tag] : kTags) {
    if (fam == f) return tag;
  }
  return "?";
}

LieFamily ParseFamilyTag(std::string_view tag) {
  for (const auto& [fam, t] : kTags) {
    if (t == tag) return fam;
  }
  throw UnsupportedFamily("unknown Lie family tag '" + std::string(tag) + "'");
}

bool IsClassical(LieFamily f) {
  switch (f) {
    case LieFamily::kA:
    case LieFamily::k2A:
    case LieFamily::kB:
    case LieFamily::kC:
    case LieFamily::kD:
    case LieFamily::k2D:
      return true;
    default:
      return false;
  }
}

std::optional<unsigned> FixedRank(LieFamily f) {
  switch (f) {
    case LieFamily::kG2: return 2;
    case LieFamily::kF4: return 4;
    case LieFamily::kE6: return 6;
    case LieFamily::k2E6: return 6;
    case LieFamily::kE7: return 7;
    case LieFamily::kE8: return 8;
    case LieFamily::k2B2: return 2;
    case LieFamily::k2G2: return 2;
    case LieFamily::k3D4: return 4;
    case LieFamily::k2F4: return 4;
    default: return std::nullopt;
  }
}

GroupSpec GroupSpec::Lie(LieFamily family, unsigned rank, const BigInt& q) {
  auto pp = PrimePowerDecomposition(q);
  if (!pp) throw InvalidArgument("q = " + ToString(q) + " is not a prime power");
  const auto& [p, a] = *pp;
  const std::string name = std::string(FamilyTag(family)) + std::to_string(rank) +
                           "(" + ToString(q) + ")";
  auto reject = [&](const std::string& why) -> void {
    throw InvalidArgument(name + " is not a valid simple group: " + why);
  };
  if (auto fixed = FixedRank(family); fixed && rank != *fixed) {
    reject("rank of " + std::string(FamilyTag(family)) + " is " + std::to_string(*fixed));
  }
  switch (family) {
    case LieFamily::kA:
      if (rank < 1) reject("rank >= 1");
      if (rank == 1 && q < 4) reject("PSL_2(2) and PSL_2(3) are solvable");
      break;
    case LieFamily::k2A:
      if (rank < 2) reject("rank >= 2 (PSU_2 is PSL_2)");
      if (rank == 2 && q == 2) reject("PSU_3(2) is solvable");
      break;
    case LieFamily::kB:
    case LieFamily::kC:
      if (rank < 2) reject("rank >= 2");
      if (rank == 2 && q == 2) reject("Sp_4(2) is not simple");
      break;
    case LieFamily::kD:
    case LieFamily::k2D:
      if (rank < 4) reject("rank >= 4");
      break;
    case LieFamily::kG2:
      if (q == 2) reject("G_2(2) is not simple");
      break;
    case LieFamily::k2B2:
    case LieFamily::k2F4:
      if (!IsOddPowerOf(p, a, 2) || a < 3) reject("q must be 2^{2m+1} with m >= 1");
      break;
    case LieFamily::k2G2:
      if (!IsOddPowerOf(p, a, 3) || a < 3) reject("q must be 3^{2m+1} with m >= 1");
      break;
    default:
      break;
  }
  GroupSpec g;
  g.family_ = family;
  g.rank_ = rank;
  g.q_ = q;
  g.p_ = p;
  g.a_ = a;
  return g;
}

GroupSpec GroupSpec::Alternating(unsigned n) {
  if (n < 5) throw InvalidArgument("A_" + std::to_string(n) + " is not simple nonabelian");
  GroupSpec g;
  g.alternating_ = true;
  g.rank_ = n;
  return g;
}

GroupSpec GroupSpec::Parse(std::string_view text) {
  const std::string t(text);
  auto bad = [&t]() { return InvalidArgument("cannot parse group '" + t + "'"); };
  auto number = [&](std::string_view s) -> unsigned long {
    if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string_view::npos) throw bad();
    return std::stoul(std::string(s));
  };
  const auto open = text.find('(');
  if (open == std::string_view::npos) {
    if (text.size() < 2 || text[0] != 'A') throw bad();
    return Alternating(static_cast<unsigned>(number(text.substr(1))));
  }
  if (text.back() != ')') throw bad();
  const std::string_view head = text.substr(0, open);
  const BigInt q = ParseBigInt(text.substr(open + 1, text.size() - open - 2));
  for (const auto& [fam, tag] : kTags) {
    if (FixedRank(fam) && head == tag) return Lie(fam, *FixedRank(fam), q);
  }
  std::size_t cut = head.size();
  while (cut > 0 && head[cut - 1] >= '0' && head[cut - 1] <= '9') --cut;
  if (cut == 0 || cut == head.size()) throw bad();
  const LieFamily fam = ParseFamilyTag(head.substr(0, cut));
  return Lie(fam, static_cast<unsigned>(number(head.substr(cut))), q);
}

std::string GroupSpec::Name() const {
  if (alternating_) return "A" + std::to_string(rank_);
  std::string s(FamilyTag(family_));
  if (!FixedRank(family_)) s += std::to_string(rank_);
  return s + "(" + ToString(q_) + ")";
}

OrderPolynomial LieOrderPolynomial(LieFamily family, unsigned rank) {
  using OP = OrderPolynomial;
  const unsigned n = rank;
  OP out;
  auto times_minus = [&out](std::initializer_list<unsigned> ds) {
    for (unsigned d : ds) out = out * OP::QPowerMinusOne(d);
  };
  switch (family) {
    case LieFamily::kA:
      out = OP::QPower(n * (n + 1) / 2);
      for (unsigned i = 2; i <= n + 1; ++i) out = out * OP::QPowerMinusOne(i);
      return out;
    case LieFamily::k2A:
      out = OP::QPower(n * (n + 1) / 2);
      for (unsigned i = 2; i <= n + 1; ++i) {
        out = out * OP::QPowerMinusSign(i, i % 2 == 0 ? 1 : -1);
      }
      return out;
    case LieFamily::kB:
    case LieFamily::kC:
      out = OP::QPower(n * n);
      for (unsigned i = 1; i <= n; ++i) out = out * OP::QPowerMinusOne(2 * i);
      return out;
    case LieFamily::kD:
    case LieFamily::k2D:
      out = OP::QPower(n * (n - 1)) *
            OP::QPowerMinusSign(n, family == LieFamily::kD ? 1 : -1);
      for (unsigned i = 1; i < n; ++i) out = out * OP::QPowerMinusOne(2 * i);
      return out;
    case LieFamily::kG2:
      out = OP::QPower(6);
      times_minus({2, 6});
      return out;
    case LieFamily::kF4:
      out = OP::QPower(24);
      times_minus({2, 6, 8, 12});
      return out;
    case LieFamily::kE6:
      out = OP::QPower(36);
      times_minus({2, 5, 6, 8, 9, 12});
      return out;
    case LieFamily::k2E6:
      out = OP::QPower(36) * OP::QPowerPlusOne(5) * OP::QPowerPlusOne(9);
      times_minus({2, 6, 8, 12});
      return out;
    case LieFamily::kE7:
      out = OP::QPower(63);
      times_minus({2, 6, 8, 10, 12, 14, 18});
      return out;
    case LieFamily::kE8:
      out = OP::QPower(120);
      times_minus({2, 8, 12, 14, 18, 20, 24, 30});
      return out;
    case LieFamily::k2B2:
      return OP::QPower(2) * OP::QPowerPlusOne(2) * OP::QPowerMinusOne(1);
    case LieFamily::k2G2:
      return OP::QPower(3) * OP::QPowerPlusOne(3) * OP::QPowerMinusOne(1);
    case LieFamily::k3D4:
      // q^8 + q^4 + 1 = Phi3 Phi6 Phi12.
      out = OP::QPower(12) * OP::Phi(3) * OP::Phi(6) * OP::Phi(12);
      times_minus({2, 6});
      return out;
    case LieFamily::k2F4:
      out = OP::QPower(12) * OP::QPowerPlusOne(6) * OP::QPowerPlusOne(3);
      times_minus({4, 1});
      return out;
  }
  throw UnsupportedFamily("no order formula");
}

BigInt CenterSize(const GroupSpec& g) {
  if (g.is_alternating()) return 1;
  const BigInt& q = g.q();
  const unsigned n = g.rank();
  switch (g.family()) {
    case LieFamily::kA: return gcd(BigInt(n + 1), BigInt(q - 1));
    case LieFamily::k2A: return gcd(BigInt(n + 1), BigInt(q + 1));
    case LieFamily::kB:
    case LieFamily::kC:
    case LieFamily::kE7: return gcd(BigInt(2), BigInt(q - 1));
    case LieFamily::kD: return gcd(BigInt(4), BigInt(Pow(q, n) - 1));
    case LieFamily::k2D: return gcd(BigInt(4), BigInt(Pow(q, n) + 1));
    case LieFamily::kE6: return gcd(BigInt(3), BigInt(q - 1));
    case LieFamily::k2E6: return gcd(BigInt(3), BigInt(q + 1));
    default: return 1;
  }
}

BigInt UniversalOrder(const GroupSpec& g) {
  if (g.is_alternating()) {
    if (g.degree() > kMaxExactAlternatingDegree) {
      throw InvalidArgument("exact alternating orders are limited to n <= " +
                            std::to_string(kMaxExactAlternatingDegree));
    }
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), g.degree());
    return f / 2;
  }
  return LieOrderPolynomial(g.family(), g.rank()).EvaluateInteger(g.q());
}

BigInt SimpleOrder(const GroupSpec& g) {
  BigInt u = UniversalOrder(g);
  BigInt z = CenterSize(g);
  if (!mpz_divisible_p(u.get_mpz_t(), z.get_mpz_t())) {
    throw NonExactQuotient("center size does not divide the universal order");
  }
  return u / z;
}

}  // namespace codeg
