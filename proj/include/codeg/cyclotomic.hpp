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

#ifndef CODEG_CYCLOTOMIC_HPP_
#define CODEG_CYCLOTOMIC_HPP_

#include <map>
#include <vector>

#include "codeg/int_polynomial.hpp"

namespace codeg {

// Cyclotomic index -> exponent. Indices are >= 1.
using CycloExponents = std::map<unsigned, long>;

// Positive divisors of n in increasing order. n must be >= 1.
std::vector<unsigned> Divisors(unsigned n);

unsigned EulerPhi(unsigned n);

// Phi_n(x), computed as (x^n - 1) / prod_{d | n, d < n} Phi_d(x) by exact
// division and memoized process-wide. Rejects n == 0.
const IntPolynomial& CyclotomicPoly(unsigned n);

// Cyclotomic indices of x^m - 1: every divisor of m with exponent 1.
CycloExponents CycloFactorExponents(unsigned m);

// Cyclotomic indices of x^m + 1 = (x^{2m} - 1) / (x^m - 1).
CycloExponents CycloFactorExponentsPlusOne(unsigned m);

}  // namespace codeg

#endif  // CODEG_CYCLOTOMIC_HPP_
