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

#include "codeg/cyclotomic.hpp"

#include <mutex>

#include "codeg/errors.hpp"

namespace codeg {

std::vector<unsigned> Divisors(unsigned n) {
  if (n == 0) throw InvalidArgument("divisors of 0");
  std::vector<unsigned> small, large;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

unsigned EulerPhi(unsigned n) {
  if (n == 0) throw InvalidArgument("phi(0)");
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const IntPolynomial& CyclotomicPoly(unsigned n) {
  if (n == 0) throw InvalidArgument("cyclotomic polynomial index must be >= 1");
  static std::mutex mu;
  static std::map<unsigned, IntPolynomial> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  IntPolynomial p = IntPolynomial::Binomial(n, -1);
  for (unsigned d : Divisors(n)) {
    if (d != n) p = p.ExactDivMonic(CyclotomicPoly(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  // Map nodes are stable, so handing out references is safe.
  return memo.emplace(n, std::move(p)).first->second;
}

CycloExponents CycloFactorExponents(unsigned m) {
  if (m == 0) throw InvalidArgument("x^0 - 1 has no cyclotomic factorization");
  CycloExponents out;
  for (unsigned d : Divisors(m)) out[d] = 1;
  return out;
}

CycloExponents CycloFactorExponentsPlusOne(unsigned m) {
  if (m == 0) throw InvalidArgument("x^0 + 1 is not a cyclotomic product");
  CycloExponents out;
  for (unsigned d : Divisors(2 * m)) {
    if (m % d != 0) out[d] = 1;
  }
  return out;
}

}  // namespace codeg
