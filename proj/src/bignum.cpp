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

#include "codeg/bignum.hpp"

#include <cctype>

#include "codeg/errors.hpp"

namespace codeg {

BigInt Pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigRat Pow(const BigRat& base, unsigned long exponent) {
  BigRat out(Pow(base.get_num(), exponent), Pow(base.get_den(), exponent));
  out.canonicalize();
  return out;
}

BigRat MakeRat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  BigRat out(num, den);
  out.canonicalize();
  return out;
}

namespace {

bool IsDecimal(std::string_view s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

BigInt ParseBigInt(std::string_view text) {
  if (!IsDecimal(text)) {
    throw InvalidArgument("not a decimal integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text), 10);
}

BigRat ParseBigRat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRat(ParseBigInt(text));
  std::string_view den = text.substr(slash + 1);
  if (den.empty() || den[0] == '-') {
    throw InvalidArgument("malformed fraction: '" + std::string(text) + "'");
  }
  return MakeRat(ParseBigInt(text.substr(0, slash)), ParseBigInt(den));
}

std::string ToString(const BigInt& v) { return v.get_str(10); }

std::string ToString(const BigRat& v) {
  if (v.get_den() == 1) return v.get_num().get_str(10);
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

}  // namespace codeg
