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

#include "codeg/group_data.hpp"

#include "codeg/errors.hpp"
#include "codeg/number_theory.hpp"

namespace codeg {

namespace {

void RequireLie(const GroupSpec& g, const char* what) {
  if (!g.is_lie()) throw UnsupportedFamily(std::string(what) + " needs a group of Lie type, got " + g.Name());
}

void RequireAlternatingArgs(unsigned n, const BigInt& p) {
  if (n < 5) throw InvalidArgument("alternating degree must be >= 5");
  if (!IsPrime(p)) throw InvalidArgument(ToString(p) + " is not prime");
}

}  // namespace

BigInt LszMinDegree(const GroupSpec& g, const GroupData& data) {
  RequireLie(g, "lsz bound");
  return data.lsz().Lookup(g);
}

BigInt MinPermDegree(const GroupSpec& g, const GroupData& data) {
  RequireLie(g, "minimal permutation degree");
  return data.minperm().Lookup(g);
}

BigInt NaturalModuleSize(const GroupSpec& g) {
  RequireLie(g, "natural module");
  const unsigned n = g.rank();
  switch (g.family()) {
    case LieFamily::kA: return Pow(g.q(), n + 1);
    case LieFamily::k2A: return Pow(g.q(), 2 * (n + 1));
    case LieFamily::kB: return Pow(g.q(), 2 * n + 1);
    case LieFamily::kC:
    case LieFamily::kD:
    case LieFamily::k2D: return Pow(g.q(), 2 * n);
    default: throw UnsupportedFamily("no natural module for exceptional group " + g.Name());
  }
}

unsigned long AlternatingPPartBoundExponent(unsigned n, const BigInt& p) {
  RequireAlternatingArgs(n, p);
  if (p == 2) return n - 2;
  BigInt e = BigInt(n - 1) / (p - 1);
  return e.get_ui();
}

BigInt AlternatingPPartBound(unsigned n, const BigInt& p) {
  return Pow(p, AlternatingPPartBoundExponent(n, p));
}

unsigned long ExactAlternatingPPartExponent(unsigned n, const BigInt& p) {
  RequireAlternatingArgs(n, p);
  unsigned long e = 0;
  for (BigInt pk = p; pk <= n; pk *= p) {
    BigInt t = BigInt(n) / pk;
    e += t.get_ui();
  }
  return p == 2 ? e - 1 : e;
}

BigInt ExactAlternatingPPart(unsigned n, const BigInt& p) {
  return Pow(p, ExactAlternatingPPartExponent(n, p));
}

BigInt MullerJamesBound(unsigned n) {
  if (n < 11) throw InvalidArgument("the Mueller bound needs n >= 11");
  BigInt m(n);
  BigInt quartic = m * m * m * m - 14 * m * m * m + 47 * m * m - 34 * m;
  BigInt q4;
  mpz_cdiv_q_ui(q4.get_mpz_t(), quartic.get_mpz_t(), 24);
  BigInt g = n % 2 == 1 ? 55 * Pow(BigInt(2), (n - 11) / 2) : 89 * Pow(BigInt(2), (n - 12) / 2);
  return q4 < g ? q4 : g;
}

}  // namespace codeg
