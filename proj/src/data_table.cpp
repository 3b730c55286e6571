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

#include "codeg/data_table.hpp"

#include <climits>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "codeg/errors.hpp"
#include "text_lines.hpp"

namespace codeg {

namespace {

using Line = internal::TokenLine;
using internal::TokenizeLines;

void CheckHeader(const std::vector<Line>& lines, std::string_view kind) {
  if (lines.empty()) throw ParseError(1, 0, "empty data file");
  const Line& h = lines.front();
  if (h.tokens.size() != 3 || h.tokens[0] != "CODEG-DATA") {
    throw ParseError(h.number, 1, "expected header 'CODEG-DATA 1 " + std::string(kind) + "'");
  }
  if (h.tokens[1] != "1") throw ParseError(h.number, 2, "unsupported data version " + h.tokens[1]);
  if (h.tokens[2] != kind) {
    throw ParseError(h.number, 3, "expected table kind '" + std::string(kind) + "', got '" + h.tokens[2] + "'");
  }
}

unsigned ParseSmall(const std::string& s, std::size_t line, std::size_t field) {
  if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(line, field, "expected a small non-negative integer, got '" + s + "'");
  }
  return static_cast<unsigned>(std::stoul(s));
}

std::string JoinFrom(const std::vector<std::string>& toks, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < toks.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += toks[i];
  }
  return out;
}

RowCondition ParseCondition(const std::string& c, std::size_t line) {
  RowCondition rc;
  if (c == "odd") { rc.kind = RowCondition::Kind::kOdd; return rc; }
  if (c == "even") { rc.kind = RowCondition::Kind::kEven; return rc; }
  if (c == "rank-odd") { rc.kind = RowCondition::Kind::kRankOdd; return rc; }
  if (c == "rank-even") { rc.kind = RowCondition::Kind::kRankEven; return rc; }
  if (c.size() < 3 || (c[0] != 'q' && c[0] != 'p')) {
    throw ParseError(line, 3, "unknown condition '" + c + "'");
  }
  rc.kind = RowCondition::Kind::kCompare;
  rc.variable = c[0];
  std::size_t i = 1;
  while (i < c.size() && (c[i] == '<' || c[i] == '>' || c[i] == '=' || c[i] == '!')) ++i;
  rc.op = c.substr(1, i - 1);
  if (rc.op != "=" && rc.op != "!=" && rc.op != "<" && rc.op != "<=" && rc.op != ">" && rc.op != ">=") {
    throw ParseError(line, 3, "unknown comparison in '" + c + "'");
  }
  if (rc.variable == 'p' && rc.op != "=") throw ParseError(line, 3, "only 'p=N' is supported");
  try {
    rc.value = ParseBigInt(c.substr(i));
  } catch (const InvalidArgument& e) {
    throw ParseError(line, 3, e.what());
  }
  return rc;
}

}  // namespace

bool RowCondition::Holds(const GroupSpec& g) const {
  switch (kind) {
    case Kind::kOdd: return mpz_odd_p(g.q().get_mpz_t()) != 0;
    case Kind::kEven: return mpz_even_p(g.q().get_mpz_t()) != 0;
    case Kind::kRankOdd: return g.rank() % 2 == 1;
    case Kind::kRankEven: return g.rank() % 2 == 0;
    case Kind::kCompare: break;
  }
  const BigInt& v = variable == 'p' ? g.p() : g.q();
  if (op == "=") return v == value;
  if (op == "!=") return v != value;
  if (op == "<") return v < value;
  if (op == "<=") return v <= value;
  if (op == ">") return v > value;
  return v >= value;
}

bool LieDataRow::is_exception() const {
  if (rank_lo != rank_hi) return false;
  for (const auto& c : conditions) {
    if (c.kind == RowCondition::Kind::kCompare && c.variable == 'q' && c.op == "=") return true;
  }
  return false;
}

bool LieDataRow::Matches(const GroupSpec& g) const {
  if (!g.is_lie() || g.family() != family) return false;
  if (g.rank() < rank_lo || g.rank() > rank_hi) return false;
  for (const auto& c : conditions) {
    if (!c.Holds(g)) return false;
  }
  return true;
}

LieDataTable LieDataTable::Parse(std::string_view text, std::string_view kind) {
  auto lines = TokenizeLines(text);
  CheckHeader(lines, kind);
  LieDataTable t;
  t.kind_ = std::string(kind);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& l = lines[li];
    if (l.tokens.size() < 5) {
      throw ParseError(l.number, 0, "expected 'family rank-range conditions expression source-tag'");
    }
    LieDataRow row;
    row.line = l.number;
    try {
      row.family = ParseFamilyTag(l.tokens[0]);
    } catch (const UnsupportedFamily& e) {
      throw ParseError(l.number, 1, e.what());
    }
    const std::string& r = l.tokens[1];
    if (r == "*") {
      row.rank_lo = 0;
      row.rank_hi = UINT_MAX;
    } else if (auto dash = r.find('-'); dash == std::string::npos) {
      row.rank_lo = row.rank_hi = ParseSmall(r, l.number, 2);
    } else {
      row.rank_lo = ParseSmall(r.substr(0, dash), l.number, 2);
      row.rank_hi = dash + 1 == r.size() ? UINT_MAX : ParseSmall(r.substr(dash + 1), l.number, 2);
      if (row.rank_hi < row.rank_lo) throw ParseError(l.number, 2, "empty rank range '" + r + "'");
    }
    if (l.tokens[2] != "*") {
      std::string conds = l.tokens[2];
      std::size_t start = 0;
      while (true) {
        auto comma = conds.find(',', start);
        row.conditions.push_back(ParseCondition(conds.substr(start, comma - start), l.number));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    try {
      row.expression = Expression::Parse(l.tokens[3]);
    } catch (const InvalidArgument& e) {
      throw ParseError(l.number, 4, e.what());
    }
    row.source = JoinFrom(l.tokens, 4);
    t.rows_.push_back(std::move(row));
  }
  return t;
}

bool LieDataTable::Covers(const GroupSpec& g) const {
  for (const auto& row : rows_) {
    if (row.Matches(g)) return true;
  }
  return false;
}

const LieDataRow& LieDataTable::Match(const GroupSpec& g) const {
  const LieDataRow* exception = nullptr;
  const LieDataRow* generic = nullptr;
  for (const auto& row : rows_) {
    if (!row.Matches(g)) continue;
    const LieDataRow*& slot = row.is_exception() ? exception : generic;
    if (slot != nullptr) {
      throw Error(kind_ + " data: rows at lines " + std::to_string(slot->line) + " and " +
                  std::to_string(row.line) + " both match " + g.Name());
    }
    slot = &row;
  }
  if (exception != nullptr) return *exception;
  if (generic != nullptr) return *generic;
  throw UnsupportedFamily(kind_ + " data has no row for " + g.Name());
}

BigInt LieDataTable::Lookup(const GroupSpec& g) const {
  const LieDataRow& row = Match(g);
  Bindings vars{{"q", g.q()}, {"p", g.p()}, {"a", BigInt(g.a())}, {"n", BigInt(g.rank())}};
  try {
    return row.expression.EvaluateInteger(vars);
  } catch (const Error& e) {
    throw Error(kind_ + " data line " + std::to_string(row.line) + " for " + g.Name() + ": " + e.what());
  }
}

SporadicTable SporadicTable::Parse(std::string_view text) {
  auto lines = TokenizeLines(text);
  CheckHeader(lines, "sporadic");
  SporadicTable t;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& l = lines[li];
    try {
      if (l.tokens[0] == "order" && l.tokens.size() >= 4) {
        t.orders_.push_back({l.number, l.tokens[1], ParseBigInt(l.tokens[2]), JoinFrom(l.tokens, 3)});
        if (t.orders_.back().order < 1) throw ParseError(l.number, 3, "order must be positive");
      } else if (l.tokens[0] == "brauer" && l.tokens.size() >= 5) {
        BrauerDegreeRow row{l.number, l.tokens[1], ParseBigInt(l.tokens[2]), ParseBigInt(l.tokens[3]),
                            JoinFrom(l.tokens, 4)};
        if (row.degree < 2) throw ParseError(l.number, 4, "Brauer degree must be >= 2");
        t.brauer_.push_back(std::move(row));
      } else {
        throw ParseError(l.number, 1, "expected 'order name N source' or 'brauer name p d source'");
      }
    } catch (const InvalidArgument& e) {
      throw ParseError(l.number, 0, e.what());
    }
  }
  for (const auto& row : t.brauer_) {
    if (t.FindOrder(row.group) == nullptr) {
      throw ParseError(row.line, 2, "no order row for sporadic group " + row.group);
    }
  }
  return t;
}

const SporadicOrderRow* SporadicTable::FindOrder(std::string_view name) const {
  for (const auto& row : orders_) {
    if (row.name == name) return &row;
  }
  return nullptr;
}

GroupData GroupData::FromText(std::string_view lsz, std::string_view minperm,
                              std::string_view sporadic) {
  GroupData d;
  d.lsz_ = LieDataTable::Parse(lsz, "lsz");
  d.minperm_ = LieDataTable::Parse(minperm, "minperm");
  d.sporadic_ = SporadicTable::Parse(sporadic);
  return d;
}

namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open data file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

GroupData GroupData::FromDirectory(const std::string& dir) {
  return FromText(ReadFile(dir + "/lsz.dat"), ReadFile(dir + "/minperm.dat"),
                  ReadFile(dir + "/sporadic.dat"));
}

const GroupData& GroupData::Default() {
  static const GroupData data = [] {
    if (const char* dir = std::getenv("CODEG_DATA_DIR"); dir != nullptr && *dir != '\0') {
      return FromDirectory(dir);
    }
    return FromText(EmbeddedLsz(), EmbeddedMinPerm(), EmbeddedSporadic());
  }();
  return data;
}

}  // namespace codeg
