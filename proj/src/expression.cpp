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

#include "codeg/expression.hpp"

#include <cctype>
#include <vector>

#include "codeg/errors.hpp"

namespace codeg {

struct Expression::Node {
  enum class Kind { kNumber, kVariable, kNegate, kBinary, kCall };
  Kind kind;
  char op = 0;
  BigInt number;
  std::string name;
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Node = Expression::Node;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr ParseAll() {
    NodePtr n = ParseExpr();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw InvalidArgument("expression '" + std::string(text_) + "' at offset " +
                          std::to_string(pos_) + ": " + what);
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool Accept(char c) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr Binary(char op, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::kBinary;
    n->op = op;
    n->args = {std::move(a), std::move(b)};
    return n;
  }

  NodePtr ParseExpr() {
    NodePtr lhs = ParseTerm();
    while (true) {
      if (Accept('+')) {
        lhs = Binary('+', lhs, ParseTerm());
      } else if (Accept('-')) {
        lhs = Binary('-', lhs, ParseTerm());
      } else {
        return lhs;
      }
    }
  }

  NodePtr ParseTerm() {
    NodePtr lhs = ParseUnary();
    while (true) {
      if (Accept('*')) {
        lhs = Binary('*', lhs, ParseUnary());
      } else if (Accept('/')) {
        lhs = Binary('/', lhs, ParseUnary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr ParseUnary() {
    if (Accept('-')) {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::kNegate;
      n->args = {ParseUnary()};
      return n;
    }
    NodePtr base = ParseAtom();
    if (Accept('^')) return Binary('^', base, ParseUnary());
    return base;
  }

  NodePtr ParseAtom() {
    SkipSpace();
    if (pos_ >= text_.size()) Fail("unexpected end");
    const char c = text_[pos_];
    if (Accept('(')) {
      NodePtr inner = ParseExpr();
      if (!Accept(')')) Fail("expected ')'");
      return inner;
    }
    auto n = std::make_shared<Node>();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      n->kind = Node::Kind::kNumber;
      n->number = BigInt(std::string(text_.substr(start, pos_ - start)), 10);
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      n->name = std::string(text_.substr(start, pos_ - start));
      if (Accept('(')) {
        n->kind = Node::Kind::kCall;
        do {
          n->args.push_back(ParseExpr());
        } while (Accept(','));
        if (!Accept(')')) Fail("expected ')' after arguments of " + n->name);
        const std::size_t want = n->name == "sqrt" ? 1 : 2;
        if ((n->name != "sqrt" && n->name != "gcd" && n->name != "min" && n->name != "max")) {
          Fail("unknown function " + n->name);
        }
        if (n->args.size() != want) Fail("wrong number of arguments to " + n->name);
        return n;
      }
      n->kind = Node::Kind::kVariable;
      return n;
    }
    Fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

BigInt RequireInteger(const BigRat& v, const char* what) {
  if (!IsInteger(v)) throw InvalidArgument(std::string(what) + " must be an integer, got " + ToString(v));
  return v.get_num();
}

BigRat Eval(const Node& n, const Bindings& vars) {
  switch (n.kind) {
    case Node::Kind::kNumber:
      return BigRat(n.number);
    case Node::Kind::kVariable: {
      auto it = vars.find(n.name);
      if (it == vars.end()) throw InvalidArgument("unbound variable " + n.name);
      return BigRat(it->second);
    }
    case Node::Kind::kNegate:
      return -Eval(*n.args[0], vars);
    case Node::Kind::kBinary: {
      BigRat a = Eval(*n.args[0], vars);
      BigRat b = Eval(*n.args[1], vars);
      BigRat out;
      switch (n.op) {
        case '+': out = a + b; break;
        case '-': out = a - b; break;
        case '*': out = a * b; break;
        case '/':
          if (b == 0) throw InvalidArgument("division by zero");
          out = a / b;
          break;
        default: {  // '^'
          BigInt e = RequireInteger(b, "exponent");
          if (e < 0 || e > 100000) throw InvalidArgument("exponent out of range: " + ToString(e));
          out = Pow(a, e.get_ui());
        }
      }
      out.canonicalize();
      return out;
    }
    case Node::Kind::kCall: {
      if (n.name == "sqrt") {
        BigInt v = RequireInteger(Eval(*n.args[0], vars), "sqrt argument");
        if (v < 0 || !mpz_perfect_square_p(v.get_mpz_t())) {
          throw InvalidArgument("sqrt of non-square " + ToString(v));
        }
        return BigRat(sqrt(v));
      }
      BigRat a = Eval(*n.args[0], vars);
      BigRat b = Eval(*n.args[1], vars);
      if (n.name == "min") return a < b ? a : b;
      if (n.name == "max") return a < b ? b : a;
      return BigRat(gcd(RequireInteger(a, "gcd argument"), RequireInteger(b, "gcd argument")));
    }
  }
  throw Error("unreachable");
}

}  // namespace

Expression Expression::Parse(std::string_view text) {
  Expression e;
  e.root_ = Parser(text).ParseAll();
  e.text_ = std::string(text);
  return e;
}

BigRat Expression::Evaluate(const Bindings& vars) const { return Eval(*root_, vars); }

BigInt Expression::EvaluateInteger(const Bindings& vars) const {
  BigRat v = Evaluate(vars);
  if (!IsInteger(v)) {
    throw NonExactQuotient("expression '" + text_ + "' evaluates to " + ToString(v));
  }
  return v.get_num();
}

}  // namespace codeg
