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

#ifndef CODEG_ORDER_POLYNOMIAL_HPP_
#define CODEG_ORDER_POLYNOMIAL_HPP_

#include <string>
#include <string_view>

#include "codeg/bignum.hpp"
#include "codeg/cyclotomic.hpp"

namespace codeg {

// scalar * q^q_exponent * prod_i Phi_i(q)^{e_i}, the common currency for
// group, centralizer and degree orders in a Lie-type parameter q.
//
// Canonical form: every stored exponent is positive (zero exponents are
// dropped) and the scalar is a canonical nonzero rational. Division that
// would produce a negative exponent throws NonExactQuotient instead of
// materializing a non-polynomial value.
class OrderPolynomial {
 public:
  OrderPolynomial() : scalar_(1) {}
  OrderPolynomial(BigRat scalar, unsigned long q_exponent,
                  CycloExponents cyclo);

  static OrderPolynomial Constant(BigRat c) { return {std::move(c), 0, {}}; }
  static OrderPolynomial QPower(unsigned long a) { return {BigRat(1), a, {}}; }
  static OrderPolynomial Phi(unsigned i, long e = 1);
  // q^m - 1 and q^m + 1.
  static OrderPolynomial QPowerMinusOne(unsigned m);
  static OrderPolynomial QPowerPlusOne(unsigned m);
  // q^m - eps with eps = +1 or -1.
  static OrderPolynomial QPowerMinusSign(unsigned m, int eps);

  const BigRat& scalar() const { return scalar_; }
  unsigned long q_exponent() const { return q_exponent_; }
  const CycloExponents& cyclo_exponents() const { return cyclo_; }
  long exponent(unsigned i) const;

  // |.|_{p'} in defining characteristic: drops the q-power.
  OrderPolynomial PPrimePart() const;
  OrderPolynomial WithScalar(BigRat s) const;

  // Exact value at an integer q >= 2.
  BigRat Evaluate(const BigInt& q) const;
  // Evaluate() for values known to be integral; throws NonExactQuotient
  // otherwise.
  BigInt EvaluateInteger(const BigInt& q) const;

  friend OrderPolynomial operator*(const OrderPolynomial& a,
                                   const OrderPolynomial& b);
  // Throws NonExactQuotient on any negative resulting exponent.
  friend OrderPolynomial operator/(const OrderPolynomial& a,
                                   const OrderPolynomial& b);
  friend bool operator==(const OrderPolynomial& a, const OrderPolynomial& b) {
    return a.scalar_ == b.scalar_ && a.q_exponent_ == b.q_exponent_ &&
           a.cyclo_ == b.cyclo_;
  }

  OrderPolynomial Pow(unsigned long k) const;

  // Canonical rendering "1/2 * q^3 * Phi1^3 * Phi5": scalar first (always),
  // then q^a when a > 0, then Phi factors by increasing index; "^1" is
  // omitted.
  std::string ToString() const;
  // Accepts ToString() output plus optional scalar and explicit "^1".
  static OrderPolynomial Parse(std::string_view text);

 private:
  BigRat scalar_;
  unsigned long q_exponent_ = 0;
  CycloExponents cyclo_;
};

}  // namespace codeg

#endif  // CODEG_ORDER_POLYNOMIAL_HPP_
