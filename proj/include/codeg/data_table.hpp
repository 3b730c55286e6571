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

#ifndef CODEG_DATA_TABLE_HPP_
#define CODEG_DATA_TABLE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "codeg/bignum.hpp"
#include "codeg/expression.hpp"
#include "codeg/group_spec.hpp"

namespace codeg {

// Line-oriented transcription tables. Every file starts with the header
//
//   CODEG-DATA 1 <kind>
//
// and '#' starts a comment. Lie tables ("lsz", "minperm") carry rows
//
//   <family> <rank-range> <conditions> <expression> <source-tag...>
//
// rank-range: "N", "N-M", "N-" (open) or "*".
// conditions: "*" or a comma-joined conjunction of "odd", "even" (of q),
//   "rank-odd", "rank-even" and comparisons "q=N", "q!=N", "q<N", "q<=N",
//   "q>N", "q>=N", "p=N".
// expression: an Expression over q, p, a (q = p^a) and n (the rank), with no
//   embedded whitespace.
//
// A row for a single rank whose conditions pin q with "q=N" is an exception
// row. Lookup prefers a matching exception row over generic rows; two
// matching rows of the same kind are a data error.
struct RowCondition {
  enum class Kind { kOdd, kEven, kRankOdd, kRankEven, kCompare };
  Kind kind;
  char variable = 'q';
  std::string op;
  BigInt value;

  bool Holds(const GroupSpec& g) const;
};

struct LieDataRow {
  std::size_t line = 0;
  LieFamily family = LieFamily::kA;
  unsigned rank_lo = 0;
  unsigned rank_hi = 0;
  std::vector<RowCondition> conditions;
  Expression expression;
  std::string source;

  bool is_exception() const;
  bool Matches(const GroupSpec& g) const;
};

class LieDataTable {
 public:
  // Throws ParseError naming the offending line.
  static LieDataTable Parse(std::string_view text, std::string_view kind);

  const std::string& kind() const { return kind_; }
  const std::vector<LieDataRow>& rows() const { return rows_; }

  bool Covers(const GroupSpec& g) const;
  // Throws UnsupportedFamily when no row matches.
  const LieDataRow& Match(const GroupSpec& g) const;
  BigInt Lookup(const GroupSpec& g) const;

 private:
  std::string kind_;
  std::vector<LieDataRow> rows_;
};

// Sporadic groups: literal orders plus caller-supplied minimal Brauer
// degrees.
//
//   order  <name> <decimal> <source-tag...>
//   brauer <name> <prime> <degree> <source-tag...>
struct SporadicOrderRow {
  std::size_t line = 0;
  std::string name;
  BigInt order;
  std::string source;
};

struct BrauerDegreeRow {
  std::size_t line = 0;
  std::string group;
  BigInt prime;
  BigInt degree;
  std::string source;
};

class SporadicTable {
 public:
  static SporadicTable Parse(std::string_view text);

  const std::vector<SporadicOrderRow>& orders() const { return orders_; }
  const std::vector<BrauerDegreeRow>& brauer_rows() const { return brauer_; }
  // nullptr if absent.
  const SporadicOrderRow* FindOrder(std::string_view name) const;

 private:
  std::vector<SporadicOrderRow> orders_;
  std::vector<BrauerDegreeRow> brauer_;
};

// The three shipped tables. Default() reads $CODEG_DATA_DIR when set and
// otherwise the copies compiled into the library.
class GroupData {
 public:
  static const GroupData& Default();
  static GroupData FromDirectory(const std::string& dir);
  static GroupData FromText(std::string_view lsz, std::string_view minperm,
                            std::string_view sporadic);

  const LieDataTable& lsz() const { return lsz_; }
  const LieDataTable& minperm() const { return minperm_; }
  const SporadicTable& sporadic() const { return sporadic_; }

  static std::string_view EmbeddedLsz();
  static std::string_view EmbeddedMinPerm();
  static std::string_view EmbeddedSporadic();

 private:
  LieDataTable lsz_;
  LieDataTable minperm_;
  SporadicTable sporadic_;
};

}  // namespace codeg

#endif  // CODEG_DATA_TABLE_HPP_
