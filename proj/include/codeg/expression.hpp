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

#ifndef CODEG_EXPRESSION_HPP_
#define CODEG_EXPRESSION_HPP_

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "codeg/bignum.hpp"

namespace codeg {

// Variable bindings for Expression::Evaluate.
using Bindings = std::map<std::string, BigInt, std::less<>>;

// Exact arithmetic expression over integer variables, used by the
// group-data tables. Grammar:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' unary)?
//   atom   := integer | name | name '(' expr (',' expr)* ')' | '(' expr ')'
//
// Functions: gcd(a,b), min(a,b), max(a,b), sqrt(a) (exact square roots of
// perfect squares only). Exponents must evaluate to non-negative integers.
// Evaluation is over the rationals; division by zero, a non-integral
// exponent or an inexact square root throws InvalidArgument.
class Expression {
 public:
  struct Node;

  static Expression Parse(std::string_view text);

  BigRat Evaluate(const Bindings& vars) const;
  // Evaluate() that insists on an integral result.
  BigInt EvaluateInteger(const Bindings& vars) const;

  const std::string& text() const { return text_; }

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace codeg

#endif  // CODEG_EXPRESSION_HPP_
