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

#include "codeg/order_polynomial.hpp"

#include <cctype>

#include "codeg/errors.hpp"

namespace codeg {

OrderPolynomial::OrderPolynomial(BigRat scalar, unsigned long q_exponent,
                                 CycloExponents cyclo)
    : scalar_(std::move(scalar)), q_exponent_(q_exponent) {
  scalar_.canonicalize();
  if (scalar_ == 0) throw InvalidArgument("order polynomial scalar must be nonzero");
  for (const auto& [i, e] : cyclo) {
    if (i == 0) throw InvalidArgument("cyclotomic index must be >= 1");
    if (e < 0) {
      throw NonExactQuotient("negative exponent on Phi" + std::to_string(i));
    }
    if (e > 0) cyclo_[i] = e;
  }
}

OrderPolynomial OrderPolynomial::Phi(unsigned i, long e) {
  return {BigRat(1), 0, {{i, e}}};
}

OrderPolynomial OrderPolynomial::QPowerMinusOne(unsigned m) {
  return {BigRat(1), 0, CycloFactorExponents(m)};
}

OrderPolynomial OrderPolynomial::QPowerPlusOne(unsigned m) {
  return {BigRat(1), 0, CycloFactorExponentsPlusOne(m)};
}

OrderPolynomial OrderPolynomial::QPowerMinusSign(unsigned m, int eps) {
  if (eps != 1 && eps != -1) throw InvalidArgument("sign must be +1 or -1");
  return eps == 1 ? QPowerMinusOne(m) : QPowerPlusOne(m);
}

long OrderPolynomial::exponent(unsigned i) const {
  auto it = cyclo_.find(i);
  return it == cyclo_.end() ? 0 : it->second;
}

OrderPolynomial OrderPolynomial::PPrimePart() const {
  return {scalar_, 0, cyclo_};
}

OrderPolynomial OrderPolynomial::WithScalar(BigRat s) const {
  return {std::move(s), q_exponent_, cyclo_};
}

BigRat OrderPolynomial::Evaluate(const BigInt& q) const {
  if (q < 2) throw InvalidArgument("order polynomials are evaluated at q >= 2");
  BigInt product = codeg::Pow(q, q_exponent_);
  for (const auto& [i, e] : cyclo_) {
    product *= codeg::Pow(CyclotomicPoly(i).Evaluate(q), e);
  }
  BigRat out = scalar_ * BigRat(product);
  out.canonicalize();
  return out;
}

BigInt OrderPolynomial::EvaluateInteger(const BigInt& q) const {
  BigRat v = Evaluate(q);
  if (!IsInteger(v)) {
    throw NonExactQuotient(ToString() + " at q = " + codeg::ToString(q) +
                           " is " + codeg::ToString(v));
  }
  return v.get_num();
}

OrderPolynomial operator*(const OrderPolynomial& a, const OrderPolynomial& b) {
  CycloExponents e = a.cyclo_;
  for (const auto& [i, k] : b.cyclo_) e[i] += k;
  return {a.scalar_ * b.scalar_, a.q_exponent_ + b.q_exponent_, std::move(e)};
}

OrderPolynomial operator/(const OrderPolynomial& a, const OrderPolynomial& b) {
  if (b.q_exponent_ > a.q_exponent_) {
    throw NonExactQuotient("q-exponent " + std::to_string(a.q_exponent_) +
                           " - " + std::to_string(b.q_exponent_) +
                           " is negative");
  }
  CycloExponents e = a.cyclo_;
  for (const auto& [i, k] : b.cyclo_) {
    long& slot = e[i];
    slot -= k;
    if (slot < 0) {
      throw NonExactQuotient("exponent of Phi" + std::to_string(i) +
                             " would be " + std::to_string(slot));
    }
  }
  return {a.scalar_ / b.scalar_, a.q_exponent_ - b.q_exponent_, std::move(e)};
}

OrderPolynomial OrderPolynomial::Pow(unsigned long k) const {
  CycloExponents e = cyclo_;
  for (auto& [i, v] : e) v *= static_cast<long>(k);
  return {codeg::Pow(scalar_, k), q_exponent_ * k, std::move(e)};
}

std::string OrderPolynomial::ToString() const {
  std::string out = codeg::ToString(scalar_);
  if (q_exponent_ > 0) {
    out += " * q";
    if (q_exponent_ > 1) out += "^" + std::to_string(q_exponent_);
  }
  for (const auto& [i, e] : cyclo_) {
    out += " * Phi" + std::to_string(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

std::string_view Strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

unsigned long ParseCount(std::string_view s, std::size_t field) {
  if (s.empty() || s.size() > 9) throw ParseError(1, field, "bad exponent '" + std::string(s) + "'");
  unsigned long v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(1, field, "bad exponent '" + std::string(s) + "'");
    }
    v = v * 10 + static_cast<unsigned long>(c - '0');
  }
  return v;
}

}  // namespace

OrderPolynomial OrderPolynomial::Parse(std::string_view text) {
  BigRat scalar = 1;
  unsigned long qexp = 0;
  CycloExponents cyclo;
  std::size_t field = 0;
  bool any = false;
  while (true) {
    ++field;
    auto star = text.find('*');
    std::string_view tok = Strip(text.substr(0, star));
    if (tok.empty()) throw ParseError(1, field, "empty factor");
    any = true;
    std::string_view base = tok, exp;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      base = tok.substr(0, caret);
      exp = tok.substr(caret + 1);
    }
    unsigned long e = exp.empty() ? 1 : ParseCount(exp, field);
    if (base == "q") {
      qexp += e;
    } else if (base.substr(0, 3) == "Phi") {
      unsigned long idx = ParseCount(base.substr(3), field);
      if (idx == 0) throw ParseError(1, field, "Phi0 is not defined");
      cyclo[static_cast<unsigned>(idx)] += static_cast<long>(e);
    } else {
      if (!exp.empty()) throw ParseError(1, field, "exponent on scalar");
      try {
        scalar *= ParseBigRat(base);
      } catch (const InvalidArgument& ex) {
        throw ParseError(1, field, ex.what());
      }
    }
    if (star == std::string_view::npos) break;
    text.remove_prefix(star + 1);
  }
  if (!any) throw ParseError(1, 0, "empty order polynomial");
  if (scalar == 0) throw ParseError(1, 0, "zero scalar");
  return {scalar, qexp, cyclo};
}

}  // namespace codeg
