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

#ifndef CODEG_BIGNUM_HPP_
#define CODEG_BIGNUM_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace codeg {

// Arbitrary-precision integers and rationals. BigRat values produced by this
// library are always canonical: positive denominator, coprime terms.
using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt Pow(const BigInt& base, unsigned long exponent);
BigRat Pow(const BigRat& base, unsigned long exponent);

BigRat MakeRat(const BigInt& num, const BigInt& den);

inline bool IsInteger(const BigRat& r) { return r.get_den() == 1; }

// Parses a decimal integer with optional leading '-'. Throws InvalidArgument.
BigInt ParseBigInt(std::string_view text);

// Parses "a" or "a/b". Throws InvalidArgument on malformed text or b == 0.
BigRat ParseBigRat(std::string_view text);

std::string ToString(const BigInt& v);
// "p" for integers, "p/q" otherwise.
std::string ToString(const BigRat& v);

}  // namespace codeg

#endif  // CODEG_BIGNUM_HPP_
