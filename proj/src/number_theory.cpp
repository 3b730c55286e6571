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

#include "codeg/number_theory.hpp"

#include <algorithm>
#include <map>

#include "codeg/cyclotomic.hpp"
#include "codeg/errors.hpp"

namespace codeg {

namespace {

constexpr unsigned long kMillerRabinBases[] = {2,  3,  5,  7,  11, 13, 17,
                                               19, 23, 29, 31, 37, 41};

bool MillerRabinWitness(const BigInt& n, const BigInt& d, unsigned long s,
                        unsigned long base) {
  BigInt a = base;
  BigInt x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const BigInt n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return false;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return false;
  }
  return true;
}

BigInt PollardBrent(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    const unsigned long m = 128;
    auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    for (unsigned long r = 1; g == 1; r <<= 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      for (unsigned long k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void FactorInto(const BigInt& n, std::map<BigInt, unsigned long>& out) {
  if (n == 1) return;
  if (IsPrime(n)) {
    ++out[n];
    return;
  }
  BigInt d = PollardBrent(n);
  FactorInto(d, out);
  FactorInto(BigInt(n / d), out);
}

}  // namespace

bool IsPrime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned long p : kMillerRabinBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  // 3317044064679887385961981 is the least strong pseudoprime to all of the
  // bases above.
  static const BigInt kDeterministicBound("3317044064679887385961981");
  if (n >= kDeterministicBound) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
  }
  BigInt d = n - 1;
  unsigned long s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  for (unsigned long base : kMillerRabinBases) {
    if (MillerRabinWitness(n, d, s, base)) return false;
  }
  return true;
}

std::vector<std::pair<BigInt, unsigned long>> Factor(const BigInt& n) {
  if (n < 1) throw InvalidArgument("factorization requires n >= 1");
  std::map<BigInt, unsigned long> found;
  BigInt rest = n;
  for (unsigned long p = 2; p <= kTrialDivisionBound; p += (p == 2 ? 1 : 2)) {
    if ((p & 4095) == 1 && BigInt(p) * p > rest) break;
    // A large prime cofactor would otherwise cost the full trial range.
    if ((p & 4095) == 1 && IsPrime(rest)) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++found[BigInt(p)];
    }
  }
  FactorInto(rest, found);
  return {found.begin(), found.end()};
}

unsigned long PValuation(BigInt n, const BigInt& p) {
  if (n < 1) throw InvalidArgument("p-part requires n >= 1");
  if (!IsPrime(p)) throw InvalidArgument("not a prime: " + ToString(p));
  unsigned long v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

BigInt PPart(const BigInt& n, const BigInt& p) {
  return Pow(p, PValuation(n, p));
}

BigInt PPrimePart(const BigInt& n, const BigInt& p) { return n / PPart(n, p); }

std::optional<std::pair<BigInt, unsigned long>> PrimePowerDecomposition(
    const BigInt& q) {
  if (q < 2) return std::nullopt;
  auto f = Factor(q);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

ZsigmondyResult ZsigmondyPpd(const BigInt& q, unsigned n) {
  if (q < 2) throw InvalidArgument("Zsigmondy requires q >= 2");
  if (n < 1) throw InvalidArgument("Zsigmondy requires n >= 1");
  if (n == 1) return {std::nullopt, "n = 1 is excluded"};
  if (n == 2) {
    BigInt s = q + 1;
    if ((s & (s - 1)) == 0) {
      return {std::nullopt, "n = 2 and q + 1 = " + ToString(s) + " is a power of 2"};
    }
  }
  if (n == 6 && q == 2) return {std::nullopt, "(q, n) = (2, 6)"};

  // The primitive prime divisors of q^n - 1 are exactly the prime divisors of
  // Phi_n(q) that do not divide n, and each is congruent to 1 mod n.
  BigInt cofactor = CyclotomicPoly(n).Evaluate(q);
  for (unsigned d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    while (mpz_divisible_ui_p(cofactor.get_mpz_t(), d)) cofactor /= d;
  }
  if (cofactor == 1) {
    throw Error("no primitive prime divisor found for non-exceptional (" +
                ToString(q) + ", " + std::to_string(n) + ")");
  }
  if (IsPrime(cofactor)) return {cofactor, ""};
  BigInt root = sqrt(cofactor);
  const unsigned long limit =
      root < kTrialDivisionBound ? root.get_ui() : kTrialDivisionBound;
  for (unsigned long r = n + 1; r <= limit; r += n) {
    if (mpz_divisible_ui_p(cofactor.get_mpz_t(), r)) return {BigInt(r), ""};
  }
  // Every prime factor is 1 mod n, and those up to the limit were excluded.
  std::map<BigInt, unsigned long> found;
  FactorInto(cofactor, found);
  return {found.begin()->first, ""};
}

}  // namespace codeg
