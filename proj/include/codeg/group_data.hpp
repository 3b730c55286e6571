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

#ifndef CODEG_GROUP_DATA_HPP_
#define CODEG_GROUP_DATA_HPP_

#include "codeg/bignum.hpp"
#include "codeg/data_table.hpp"
#include "codeg/group_spec.hpp"

namespace codeg {

// Smallest nontrivial cross-characteristic projective degree bound.
// Throws UnsupportedFamily when the table has no row.
BigInt LszMinDegree(const GroupSpec& g, const GroupData& data = GroupData::Default());

// Minimal faithful permutation degree of the simple group.
BigInt MinPermDegree(const GroupSpec& g, const GroupData& data = GroupData::Default());

// q^d for the natural module of a classical group. For 2A the module is
// F_{q^2}^{n+1}, so the size is q^{2(n+1)}.
BigInt NaturalModuleSize(const GroupSpec& g);

// p^{floor((n-1)/(p-1))} for odd p, 2^{n-2} for p = 2.
BigInt AlternatingPPartBound(unsigned n, const BigInt& p);
unsigned long AlternatingPPartBoundExponent(unsigned n, const BigInt& p);
// |A_n|_p by Legendre's formula.
BigInt ExactAlternatingPPart(unsigned n, const BigInt& p);
unsigned long ExactAlternatingPPartExponent(unsigned n, const BigInt& p);

// min{(n^4-14n^3+47n^2-34n)/24, g(n)} for n >= 11, the quartic rounded up.
BigInt MullerJamesBound(unsigned n);

}  // namespace codeg

#endif  // CODEG_GROUP_DATA_HPP_
