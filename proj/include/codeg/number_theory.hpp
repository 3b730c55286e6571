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

#ifndef CODEG_NUMBER_THEORY_HPP_
#define CODEG_NUMBER_THEORY_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "codeg/bignum.hpp"

namespace codeg {

// Deterministic Miller-Rabin below 3.3e24; beyond that GMP's BPSW test.
bool IsPrime(const BigInt& n);

// Prime factorization in increasing order of primes. Trial division up to
// kTrialDivisionBound, then primality test and Pollard-Brent rho on any
// composite cofactor. n must be >= 1.
inline constexpr unsigned long kTrialDivisionBound = 10'000'000;
std::vector<std::pair<BigInt, unsigned long>> Factor(const BigInt& n);

// Largest power of p dividing n, and the complementary cofactor.
// Throws InvalidArgument unless n >= 1 and p is prime.
BigInt PPart(const BigInt& n, const BigInt& p);
BigInt PPrimePart(const BigInt& n, const BigInt& p);
unsigned long PValuation(BigInt n, const BigInt& p);

// (p, a) with q = p^a, or nullopt if q is not a prime power.
std::optional<std::pair<BigInt, unsigned long>> PrimePowerDecomposition(
    const BigInt& q);

struct ZsigmondyResult {
  // Smallest primitive prime divisor of q^n - 1; absent for the classical
  // exceptions.
  std::optional<BigInt> prime;
  // Empty when a prime was found.
  std::string reason;
};

// Requires q >= 2, n >= 1.
ZsigmondyResult ZsigmondyPpd(const BigInt& q, unsigned n);

}  // namespace codeg

#endif  // CODEG_NUMBER_THEORY_HPP_
