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

#include "codeg/chartab.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "codeg/errors.hpp"
#include "codeg/number_theory.hpp"
#include "text_lines.hpp"

namespace codeg {

namespace {

class TokenParser {
 public:
  explicit TokenParser(std::string_view s) : s_(s) {}

  CycloValue Parse() {
    if (s_.empty()) Fail("empty value");
    CycloValue sum;
    bool first = true;
    while (pos_ < s_.size() || first) {
      int sign = 1;
      if (Peek() == '+' || Peek() == '-') {
        sign = Peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        Fail("expected '+' or '-'");
      }
      CycloValue term = Term();
      sum = sign > 0 ? sum + term : sum - term;
      first = false;
    }
    return sum;
  }

 private:
  char Peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void Fail(const std::string& what) const {
    throw InvalidArgument("bad value '" + std::string(s_) + "': " + what);
  }

  std::string_view Digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) Fail("expected digits at offset " + std::to_string(start));
    return s_.substr(start, pos_ - start);
  }

  unsigned long SmallNumber() {
    std::string_view d = Digits();
    if (d.size() > 9) Fail("number too large");
    return std::stoul(std::string(d));
  }

  CycloValue Root() {
    if (s_.substr(pos_, 2) != "z(") Fail("expected 'z('");
    pos_ += 2;
    unsigned long n = SmallNumber();
    if (n == 0 || n > 100000) Fail("root order out of range");
    if (Peek() != ')') Fail("expected ')'");
    ++pos_;
    unsigned long k = 1;
    if (Peek() == '^') {
      ++pos_;
      k = SmallNumber();
    }
    return CycloValue::RootOfUnity(static_cast<unsigned>(n), k % n);
  }

  CycloValue Term() {
    if (Peek() == 'z') return Root();
    BigInt num{std::string(Digits())};
    BigInt den = 1;
    if (Peek() == '/') {
      ++pos_;
      den = BigInt{std::string(Digits())};
      if (den == 0) Fail("zero denominator");
    }
    CycloValue c(MakeRat(num, den));
    if (Peek() == '*') {
      ++pos_;
      return c * Root();
    }
    return c;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

BigInt ParsePositive(const std::string& s, std::size_t line, std::size_t field) {
  BigInt v;
  try {
    v = ParseBigInt(s);
  } catch (const InvalidArgument& e) {
    throw ParseError(line, field, e.what());
  }
  if (v < 1) throw ParseError(line, field, "expected a positive integer, got " + s);
  return v;
}

std::string JoinDegrees(const std::set<BigInt>& s) {
  std::string out;
  for (const auto& d : s) out += (out.empty() ? "" : ",") + ToString(d);
  return "{" + out + "}";
}

Json SetToJson(const std::set<BigInt>& s) {
  Json a = Json::array();
  for (const auto& v : s) a.push_back(ToString(v));
  return a;
}

}  // namespace

CycloValue ParseCycloToken(std::string_view token) { return TokenParser(token).Parse(); }

CharacterTable CharacterTable::Parse(std::string_view text) {
  auto lines = internal::TokenizeLines(text);
  if (lines.empty()) throw ParseError(1, 0, "empty character table document");
  const auto& h = lines[0];
  if (h.tokens.size() != 2 || h.tokens[0] != "CHARTAB") {
    throw ParseError(h.number, 1, "expected header 'CHARTAB 1'");
  }
  if (h.tokens[1] != "1") throw ParseError(h.number, 2, "unsupported CHARTAB version " + h.tokens[1]);

  CharacterTable t;
  bool have_group = false;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& l = lines[li];
    const auto& tok = l.tokens;
    if (tok[0] == "group") {
      if (have_group) throw ParseError(l.number, 1, "duplicate group line");
      if (tok.size() != 4 || tok[2] != "order") {
        throw ParseError(l.number, 0, "expected 'group <name> order <N>'");
      }
      t.name_ = tok[1];
      t.order_ = ParsePositive(tok[3], l.number, 4);
      have_group = true;
    } else if (tok[0] == "class") {
      if (!have_group) throw ParseError(l.number, 1, "class line before group line");
      if (!t.chars_.empty()) throw ParseError(l.number, 1, "class line after char lines");
      if (tok.size() != 3) throw ParseError(l.number, 0, "expected 'class <label> <size>'");
      t.classes_.push_back({tok[1], ParsePositive(tok[2], l.number, 3)});
    } else if (tok[0] == "char") {
      if (t.classes_.empty()) throw ParseError(l.number, 1, "char line before class lines");
      if (tok.size() < 4) throw ParseError(l.number, 0, "expected 'char <label> <degree> : values'");
      Character c;
      c.label = tok[1];
      c.degree = ParsePositive(tok[2], l.number, 3);
      std::size_t colon = 3;
      if (tok[3] == "faithful" || tok[3] == "nonfaithful") {
        c.faithful_flag = tok[3] == "faithful";
        colon = 4;
      }
      if (colon >= tok.size() || tok[colon] != ":") throw ParseError(l.number, colon + 1, "expected ':'");
      for (std::size_t f = colon + 1; f < tok.size(); ++f) {
        try {
          c.values.push_back(ParseCycloToken(tok[f]));
        } catch (const InvalidArgument& e) {
          throw ParseError(l.number, f + 1, e.what());
        }
      }
      if (c.values.size() != t.classes_.size()) {
        throw ParseError(l.number, 0,
                         "character " + c.label + " has " + std::to_string(c.values.size()) +
                             " values for " + std::to_string(t.classes_.size()) + " classes");
      }
      t.chars_.push_back(std::move(c));
    } else {
      throw ParseError(l.number, 1, "unknown record '" + tok[0] + "'");
    }
  }
  if (!have_group) throw ParseError(lines.back().number, 0, "missing group line");
  if (t.chars_.empty()) throw ParseError(lines.back().number, 0, "no characters");

  BigInt sum = 0;
  for (const auto& c : t.classes_) sum += c.size;
  if (sum != t.order_) {
    throw InvariantViolation("class sizes sum to the order",
                             ToString(sum) + " != " + ToString(t.order_));
  }
  if (t.classes_[0].size != 1) {
    throw InvariantViolation("identity class first", "class " + t.classes_[0].label + " has size " +
                                                         ToString(t.classes_[0].size));
  }
  BigInt sq = 0;
  std::size_t flagged = 0;
  for (const auto& c : t.chars_) {
    if (!c.values[0].EqualsRational(BigRat(c.degree))) {
      throw InvariantViolation("value at identity equals degree",
                               "character " + c.label + " has " + c.values[0].ToString() +
                                   " at the identity, degree " + ToString(c.degree));
    }
    sq += c.degree * c.degree;
    if (c.faithful_flag) ++flagged;
  }
  if (sq != t.order_) {
    throw InvariantViolation("sum of squared degrees equals the order",
                             ToString(sq) + " != " + ToString(t.order_));
  }
  if (t.chars_.size() != t.classes_.size()) {
    throw InvariantViolation("as many characters as classes",
                             std::to_string(t.chars_.size()) + " characters, " +
                                 std::to_string(t.classes_.size()) + " classes");
  }
  if (flagged != 0 && flagged != t.chars_.size()) {
    throw InvariantViolation("faithfulness flags all or none",
                             std::to_string(flagged) + " of " + std::to_string(t.chars_.size()) +
                                 " characters flagged");
  }
  return t;
}

CharacterTable CharacterTable::FromFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open character table " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return Parse(ss.str());
}

bool CharacterTable::has_faithful_flags() const {
  return !chars_.empty() && chars_[0].faithful_flag.has_value();
}

std::optional<std::size_t> CharacterTable::FindCharacter(std::string_view label) const {
  for (std::size_t i = 0; i < chars_.size(); ++i) {
    if (chars_[i].label == label) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> CharacterTable::KernelClasses(std::size_t i) const {
  const Character& c = chars_.at(i);
  const BigRat deg(c.degree);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    if (c.values[k].EqualsRational(deg)) out.push_back(k);
  }
  return out;
}

BigInt CharacterTable::KernelOrder(std::size_t i) const {
  BigInt s = 0;
  for (auto k : KernelClasses(i)) s += classes_[k].size;
  return s;
}

BigInt CharacterTable::Codegree(std::size_t i) const {
  const BigInt ker = KernelOrder(i);
  const Character& c = chars_[i];
  if (order_ % ker != 0) {
    throw NonIntegralCodegree("kernel of " + c.label + " has order " + ToString(ker) +
                              ", which does not divide " + ToString(order_));
  }
  const BigInt index = order_ / ker;
  if (index % c.degree != 0) {
    throw NonIntegralCodegree("degree " + ToString(c.degree) + " of " + c.label +
                              " does not divide |G:ker| = " + ToString(index));
  }
  return index / c.degree;
}

std::set<BigInt> CharacterTable::Codegrees() const {
  std::set<BigInt> s;
  for (std::size_t i = 0; i < chars_.size(); ++i) s.insert(Codegree(i));
  return s;
}

std::vector<BigInt> CharacterTable::PseudoAlgebra() const {
  std::vector<BigInt> v;
  for (std::size_t i = 0; i < chars_.size(); ++i) v.push_back(Codegree(i));
  std::sort(v.begin(), v.end());
  return v;
}

std::set<BigInt> CharacterTable::Degrees() const {
  std::set<BigInt> s;
  for (const auto& c : chars_) s.insert(c.degree);
  return s;
}

std::vector<std::size_t> CharacterTable::CenterClasses() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    if (classes_[k].size == 1) out.push_back(k);
  }
  return out;
}

BigInt CharacterTable::CenterOrder() const { return BigInt(CenterClasses().size()); }

std::vector<std::size_t> CharacterTable::FaithfulCharacters() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < chars_.size(); ++i) {
    if (KernelOrder(i) == 1) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> CharacterTable::CharactersTrivialOn(
    const std::vector<std::size_t>& classes) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < chars_.size(); ++i) {
    const BigRat deg(chars_[i].degree);
    bool all = std::all_of(classes.begin(), classes.end(),
                           [&](std::size_t k) { return chars_[i].values.at(k).EqualsRational(deg); });
    if (all) out.push_back(i);
  }
  return out;
}

BigRat CharacterTable::InnerProduct(std::size_t i, std::size_t j) const {
  CycloValue s;
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    s = s + CycloValue(BigRat(classes_[k].size)) * chars_.at(i).values[k] *
                chars_.at(j).values[k].Conjugate();
  }
  if (!s.IsRational()) throw InvariantViolation("inner products are rational", s.ToString());
  return s.AsRational() / BigRat(order_);
}

VerificationReport VerifyThmEInstance(const CharacterTable& t) {
  const auto center = t.CenterClasses();
  const BigInt r = t.CenterOrder();
  VerificationReport rep;
  rep.claim = "thm-e";
  rep.Param("table", t.name()).Param("center_order", ToString(r));
  if (!IsPrime(r)) {
    rep.verdict = Verdict::kInapplicable;
    rep.narrative = "center of " + t.name() + " has order " + ToString(r) + ", not a prime";
    return rep;
  }
  std::set<BigInt> quotient;
  for (auto i : t.CharactersTrivialOn(center)) quotient.insert(t.characters()[i].degree);
  rep.Param("quotient_degrees", JoinDegrees(quotient));

  Json all = Json::array();
  std::optional<std::size_t> best;
  const auto faithful = t.FaithfulCharacters();
  for (auto i : faithful) {
    const Character& c = t.characters()[i];
    const bool integral = c.degree % r == 0;
    if (integral && quotient.count(c.degree / r) != 0) continue;
    Json w;
    w["character"] = c.label;
    w["degree"] = ToString(c.degree);
    w["quotient"] = integral ? ToString(BigInt(c.degree / r)) : ToString(MakeRat(c.degree, r));
    all.push_back(w);
    if (!best || c.degree < t.characters()[*best].degree) best = i;
  }
  rep.Param("faithful_characters", std::to_string(faithful.size()));
  if (!best) {
    rep.verdict = Verdict::kRefuted;
    Json w;
    w["checked"] = Json::array();
    for (auto i : faithful) {
      w["checked"].push_back(t.characters()[i].label + ":" + ToString(t.characters()[i].degree));
    }
    rep.witness = w;
    rep.narrative = "refuted on this table: every faithful degree divided by " + ToString(r) +
                    " is a degree of the quotient";
    return rep;
  }
  const Character& c = t.characters()[*best];
  rep.verdict = Verdict::kVerified;
  rep.witness["character"] = c.label;
  rep.witness["degree"] = ToString(c.degree);
  rep.witness["all"] = all;
  const bool integral = c.degree % r == 0;
  rep.narrative = "faithful character " + c.label + " of degree " + ToString(c.degree) + ": " +
                  ToString(c.degree) + "/" + ToString(r) + " = " +
                  (integral ? ToString(BigInt(c.degree / r)) : ToString(MakeRat(c.degree, r))) +
                  (integral ? " is not in " : " is not an integer; quotient degrees ") +
                  JoinDegrees(quotient);
  return rep;
}

VerificationReport CodegreeSubset(const CharacterTable& g, const CharacterTable& h) {
  const auto cg = g.Codegrees();
  const auto ch = h.Codegrees();
  std::set<BigInt> missing;
  std::set_difference(cg.begin(), cg.end(), ch.begin(), ch.end(),
                      std::inserter(missing, missing.begin()));
  VerificationReport rep;
  rep.claim = "cod-subset";
  rep.Param("g", g.name()).Param("h", h.name());
  rep.Param("cod_g", JoinDegrees(cg)).Param("cod_h", JoinDegrees(ch));
  if (missing.empty()) {
    rep.verdict = Verdict::kVerified;
    rep.narrative = "cod(" + g.name() + ") is contained in cod(" + h.name() + ")";
  } else {
    rep.verdict = Verdict::kRefuted;
    rep.witness["missing"] = SetToJson(missing);
    rep.narrative = "cod(" + g.name() + ") is not contained in cod(" + h.name() + "): " +
                    JoinDegrees(missing) + " missing";
  }
  return rep;
}

VerificationReport CheckProjectiveBound(const CharacterTable& t,
                                        const std::vector<std::size_t>& central_classes,
                                        const std::vector<CycloValue>& theta) {
  VerificationReport rep;
  rep.claim = "lem-proj";
  rep.Param("table", t.name());
  std::string cls;
  for (auto k : central_classes) {
    cls += (cls.empty() ? "" : ",") + (k < t.classes().size() ? t.classes()[k].label : std::to_string(k));
  }
  rep.Param("central_classes", cls);
  auto inapplicable = [&](const std::string& why) {
    rep.verdict = Verdict::kInapplicable;
    rep.narrative = why;
    return rep;
  };
  if (central_classes.size() != theta.size()) {
    return inapplicable("theta needs one value per designated class");
  }
  std::set<std::size_t> seen;
  for (auto k : central_classes) {
    if (k >= t.classes().size()) return inapplicable("class index " + std::to_string(k) + " out of range");
    if (t.classes()[k].size != 1) {
      return inapplicable("class " + t.classes()[k].label + " is not central (size " +
                          ToString(t.classes()[k].size) + ")");
    }
    if (!seen.insert(k).second) return inapplicable("class listed twice");
  }
  const BigInt n_order(central_classes.size());
  if (seen.count(0) == 0) return inapplicable("the designated classes must include the identity");
  if (t.order() % n_order != 0) {
    return inapplicable("|N| = " + ToString(n_order) + " does not divide |G| = " + ToString(t.order()));
  }
  for (std::size_t j = 0; j < central_classes.size(); ++j) {
    if (central_classes[j] == 0 && !theta[j].EqualsRational(1)) {
      return inapplicable("theta must take the value 1 at the identity");
    }
  }
  const BigInt quotient = t.order() / n_order;
  rep.Param("N_order", ToString(n_order)).Param("G_over_N", ToString(quotient));

  std::vector<std::size_t> over;
  BigInt sq = 0;
  for (std::size_t i = 0; i < t.characters().size(); ++i) {
    const Character& c = t.characters()[i];
    bool lies = true;
    for (std::size_t j = 0; j < central_classes.size() && lies; ++j) {
      lies = c.values[central_classes[j]] == CycloValue(BigRat(c.degree)) * theta[j];
    }
    if (lies) {
      over.push_back(i);
      sq += c.degree * c.degree;
    }
  }
  if (over.empty() || sq != quotient) {
    return inapplicable("theta is not a linear character of N: characters over it have degree-square sum " +
                        ToString(sq) + ", expected " + ToString(quotient));
  }
  std::string degs;
  for (auto i : over) degs += (degs.empty() ? "" : ",") + ToString(t.characters()[i].degree);
  rep.Param("degrees_over_theta", "{" + degs + "}");

  Json checks = Json::array();
  std::string text;
  for (const auto& [p, e] : Factor(quotient)) {
    BigInt m = 0;
    for (auto i : over) {
      BigInt pp = PPart(t.characters()[i].degree, p);
      if (m == 0 || pp < m) m = pp;
    }
    const BigInt qp = Pow(p, e);
    const bool ok = m * m <= qp;
    Json c;
    c["p"] = ToString(p);
    c["m_p"] = ToString(m);
    c["G_over_N_p"] = ToString(qp);
    c["holds"] = ok;
    checks.push_back(c);
    text += "p=" + ToString(p) + ": " + ToString(m) + "^2 <= " + ToString(qp) + (ok ? " holds" : " FAILS") + "\n";
    if (!ok) {
      rep.verdict = Verdict::kRefuted;
      rep.witness["failing"] = c;
      rep.witness["checks"] = checks;
      rep.narrative = text + "bound fails at p=" + ToString(p);
      return rep;
    }
  }
  rep.verdict = Verdict::kVerified;
  rep.witness["checks"] = checks;
  text.pop_back();
  rep.narrative = text;
  return rep;
}

}  // namespace codeg
