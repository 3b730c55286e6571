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

#ifndef CODEG_CHARTAB_HPP_
#define CODEG_CHARTAB_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "codeg/bignum.hpp"
#include "codeg/cyclo_value.hpp"
#include "codeg/report.hpp"

namespace codeg {

struct ConjugacyClass {
  std::string label;
  BigInt size;
};

struct Character {
  std::string label;
  BigInt degree;
  std::vector<CycloValue> values;  // aligned with the classes
  std::optional<bool> faithful_flag;
};

// An ordinary character table in the CHARTAB 1 interchange format:
//
//   CHARTAB 1
//   group <name> order <N>
//   class <label> <size>                                  (identity first)
//   char <label> <degree> [faithful|nonfaithful] : v1 v2 ...
//
// A value is an integer, a fraction a/b, or terms c*z(n)^k (also z(n)^k,
// z(n), c*z(n)) and rationals joined by '+'/'-' with no whitespace. '#'
// starts a comment. The faithfulness column is optional but all-or-none.
class CharacterTable {
 public:
  // Throws ParseError for syntax, InvariantViolation for structure.
  static CharacterTable Parse(std::string_view text);
  static CharacterTable FromFile(const std::string& path);

  const std::string& name() const { return name_; }
  const BigInt& order() const { return order_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  const std::vector<Character>& characters() const { return chars_; }
  bool has_faithful_flags() const;
  // Index by label; nullopt if absent.
  std::optional<std::size_t> FindCharacter(std::string_view label) const;

  std::vector<std::size_t> KernelClasses(std::size_t i) const;
  BigInt KernelOrder(std::size_t i) const;
  // |G : ker chi| / chi(1); throws NonIntegralCodegree.
  BigInt Codegree(std::size_t i) const;
  std::set<BigInt> Codegrees() const;
  // Codegrees with multiplicity, sorted.
  std::vector<BigInt> PseudoAlgebra() const;
  std::set<BigInt> Degrees() const;

  // Singleton classes; their union is Z(G).
  std::vector<std::size_t> CenterClasses() const;
  BigInt CenterOrder() const;
  std::vector<std::size_t> FaithfulCharacters() const;
  // Characters whose kernel contains every listed class.
  std::vector<std::size_t> CharactersTrivialOn(const std::vector<std::size_t>& classes) const;

  // sum_c |c| chi_i(c) conj(chi_j(c)) / |G|.
  BigRat InnerProduct(std::size_t i, std::size_t j) const;

 private:
  std::string name_;
  BigInt order_;
  std::vector<ConjugacyClass> classes_;
  std::vector<Character> chars_;
};

// Parses one interchange value token.
CycloValue ParseCycloToken(std::string_view token);

// Faithful chi with chi(1)/|Z| outside the degrees of G/Z (non-integral
// quotients count as outside). Inapplicable unless |Z| is prime.
VerificationReport VerifyThmEInstance(const CharacterTable& t);

// cod(g) subset of cod(h); refutations list every missing codegree.
VerificationReport CodegreeSubset(const CharacterTable& g, const CharacterTable& h);

// N = union of the designated singleton classes (identity included), theta
// the linear character of N with the given values on them. For every prime
// p dividing |G/N| checks min_{chi over theta} chi(1)_p^2 <= |G/N|_p.
VerificationReport CheckProjectiveBound(const CharacterTable& t,
                                        const std::vector<std::size_t>& central_classes,
                                        const std::vector<CycloValue>& theta);

}  // namespace codeg

#endif  // CODEG_CHARTAB_HPP_
