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

#ifndef CODEG_ERRORS_HPP_
#define CODEG_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace codeg {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the documented domain of an operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A quotient of order polynomials (or of integers) that is not exact.
class NonExactQuotient : public Error {
 public:
  using Error::Error;
};

// A group family or parameter set that the data tables do not cover.
class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

// Malformed text input. Carries the 1-based line and, when known, field.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t field, const std::string& what)
      : Error(Format(line, field, what)), line_(line), field_(field) {}

  std::size_t line() const { return line_; }
  std::size_t field() const { return field_; }

 private:
  static std::string Format(std::size_t line, std::size_t field,
                            const std::string& what) {
    std::string s = "line " + std::to_string(line);
    if (field > 0) s += ", field " + std::to_string(field);
    return s + ": " + what;
  }

  std::size_t line_;
  std::size_t field_;
};

// Well-formed input that violates a structural invariant (for instance a
// character table whose squared degrees do not sum to the group order).
class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string invariant, const std::string& detail)
      : Error(invariant + ": " + detail), invariant_(std::move(invariant)) {}

  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

// chi(1) does not divide |G : ker chi|; only a corrupted table gets here.
class NonIntegralCodegree : public Error {
 public:
  using Error::Error;
};

}  // namespace codeg

#endif  // CODEG_ERRORS_HPP_
