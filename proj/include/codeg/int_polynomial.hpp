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

#ifndef CODEG_INT_POLYNOMIAL_HPP_
#define CODEG_INT_POLYNOMIAL_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "codeg/bignum.hpp"

namespace codeg {

// Dense univariate polynomial over the integers. coeffs()[i] is the
// coefficient of x^i; the leading coefficient is nonzero unless the
// polynomial is zero, in which case coeffs() is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  // x^n + c
  static IntPolynomial Binomial(std::size_t n, long c);
  static IntPolynomial Monomial(std::size_t n, const BigInt& c = 1);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const BigInt& leading() const { return coeffs_.back(); }
  BigInt coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
  }

  BigInt Evaluate(const BigInt& x) const;
  BigRat Evaluate(const BigRat& x) const;

  friend IntPolynomial operator+(const IntPolynomial& a,
                                 const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a,
                                 const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a,
                                 const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Quotient and remainder by a monic divisor. Throws InvalidArgument if
  // the divisor is zero or not monic.
  std::pair<IntPolynomial, IntPolynomial> DivModMonic(
      const IntPolynomial& divisor) const;

  // Exact quotient by a monic divisor; throws NonExactQuotient otherwise.
  IntPolynomial ExactDivMonic(const IntPolynomial& divisor) const;

  // "x^4 - x^2 + 1"
  std::string ToString() const;

 private:
  void Trim();

  std::vector<BigInt> coeffs_;
};

}  // namespace codeg

#endif  // CODEG_INT_POLYNOMIAL_HPP_
