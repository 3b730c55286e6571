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

#ifndef CODEG_CYCLO_VALUE_HPP_
#define CODEG_CYCLO_VALUE_HPP_

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "codeg/bignum.hpp"

namespace codeg {

// An element sum_k c_k zeta_n^k of Q(zeta_n), held in canonical form: the
// residue of sum_k c_k x^k modulo Phi_n(x), a vector of phi(n) rational
// coefficients. Two values are equal iff their canonical forms agree after
// lifting to a common root order, so IsZero() is an exact decision.
class CycloValue {
 public:
  CycloValue() : CycloValue(BigRat(0)) {}
  CycloValue(BigRat rational);  // NOLINT: rationals embed implicitly.
  CycloValue(long rational) : CycloValue(BigRat(rational)) {}  // NOLINT
  // sum over (k, c) of c * zeta_n^k; k is taken mod n.
  CycloValue(unsigned root_order, const std::map<unsigned long, BigRat>& terms);

  static CycloValue RootOfUnity(unsigned n, unsigned long k);

  unsigned root_order() const { return root_order_; }
  // Canonical residue coefficients, length phi(root_order()).
  const std::vector<BigRat>& residue() const { return residue_; }
  // Nonzero canonical coefficients keyed by exponent.
  std::map<unsigned long, BigRat> Terms() const;

  bool IsZero() const;
  bool IsRational() const;
  // Only meaningful when IsRational().
  BigRat AsRational() const;
  bool EqualsRational(const BigRat& r) const;

  // Same field element expressed over Q(zeta_m); m must be a multiple of
  // root_order().
  CycloValue LiftTo(unsigned m) const;

  CycloValue Conjugate() const;
  CycloValue operator-() const;
  friend CycloValue operator+(const CycloValue& a, const CycloValue& b);
  friend CycloValue operator-(const CycloValue& a, const CycloValue& b);
  friend CycloValue operator*(const CycloValue& a, const CycloValue& b);
  friend bool operator==(const CycloValue& a, const CycloValue& b);

  std::complex<double> ToComplex() const;
  // Canonical form in the interchange syntax, e.g. "-1*z(5)^1-1*z(5)^4".
  std::string ToString() const;

 private:
  CycloValue(unsigned root_order, std::vector<BigRat> dense);

  unsigned root_order_ = 1;
  std::vector<BigRat> residue_;
};

}  // namespace codeg

#endif  // CODEG_CYCLO_VALUE_HPP_
