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

#include "codeg/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <functional>
#include <memory>
#include <sstream>

#include "codeg/chartab.hpp"
#include "codeg/conjecture.hpp"
#include "codeg/cyclotomic.hpp"
#include "codeg/errors.hpp"
#include "codeg/group_data.hpp"
#include "codeg/group_spec.hpp"
#include "codeg/lie_verify.hpp"
#include "codeg/number_theory.hpp"
#include "codeg/order_polynomial.hpp"
#include "codeg/report.hpp"

namespace codeg {

namespace {

std::string UtcNow() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

template <class Range>
std::string Braced(const Range& r, char open = '{', char close = '}') {
  std::string s(1, open);
  bool first = true;
  for (const auto& v : r) {
    if (!first) s += ',';
    s += ToString(v);
    first = false;
  }
  return s + close;
}

template <class Range>
Json Strings(const Range& r) {
  Json a = Json::array();
  for (const auto& v : r) a.push_back(ToString(v));
  return a;
}

std::vector<std::string> SplitCommas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

// Holds the parsed state shared by every subcommand.
class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int Run(const std::vector<std::string>& args);

 private:
  using Action = std::function<int()>;

  CLI::App* Leaf(CLI::App* verb, const std::string& name, const std::string& help, Action a) {
    CLI::App* sub = verb->add_subcommand(name, help);
    sub->callback([this, a]() { action_ = a; });
    return sub;
  }

  std::string Stamp() const { return timestamps_ ? UtcNow() : std::string(); }

  int Emit(const VerificationReport& rep) {
    out_ << (json_ ? rep.RenderJson(Stamp()) + "\n" : rep.RenderText(Stamp()));
    return ExitCode(rep.verdict);
  }

  int Emit(const std::string& kind, const Json& result, const std::string& text) {
    if (json_) {
      Json doc;
      doc["schema"] = kReportSchema;
      if (timestamps_) doc["generated"] = UtcNow();
      doc["kind"] = kind;
      doc["result"] = result;
      out_ << doc.dump(2) << "\n";
    } else {
      if (timestamps_) out_ << "generated: " << UtcNow() << "\n";
      out_ << text;
    }
    return 0;
  }

  void AddTable(CLI::App& app);
  void AddLie(CLI::App& app);
  void AddOrders(CLI::App& app);
  void AddCyclo(CLI::App& app);
  void AddVerify(CLI::App& app);

  std::ostream& out_;
  std::ostream& err_;
  bool json_ = false;
  bool timestamps_ = false;
  Action action_;

  // Option storage; each leaf reads only its own.
  std::string path_, path2_, group_, family_, datum_, classes_, theta_, case_;
  BigInt q_ = 0, p_ = 0, d_ = 0, number_ = 0;
  unsigned n_ = 0;
  int eps_ = 1;
  unsigned max_rank_ = kDefaultMaxRank;
  unsigned max_q_ = kDefaultMaxQ;
  unsigned long max_n_ = 0;
  unsigned min_n_ = 11;
  bool allow_large_ = false;
  bool quotient_of_center_ = false;
};

// CLI11 reads BigInt through its stream operator.
CLI::Option* AddBig(CLI::App* sub, const std::string& name, BigInt& v, const std::string& help) {
  return sub->add_option_function<std::string>(name, [&v](const std::string& s) { v = ParseBigInt(s); }, help);
}

void Cli::AddTable(CLI::App& app) {
  CLI::App* verb = app.add_subcommand("table", "Queries on a character table fixture (CHARTAB 1 format)");
  verb->require_subcommand(1);
  auto table = [this]() { return CharacterTable::FromFile(path_); };

  Leaf(verb, "cod", "Codegree set cod(G) = {|G:ker chi|/chi(1)}", [this, table]() {
    auto t = table();
    auto c = t.Codegrees();
    Json r;
    r["table"] = t.name();
    r["codegrees"] = Strings(c);
    return Emit("codegrees", r, Braced(c) + "\n");
  })->add_option("table", path_, "fixture path")->required();

  Leaf(verb, "degrees", "Character degree set cd(G)", [this, table]() {
    auto t = table();
    auto c = t.Degrees();
    Json r;
    r["table"] = t.name();
    r["degrees"] = Strings(c);
    return Emit("degrees", r, Braced(c) + "\n");
  })->add_option("table", path_, "fixture path")->required();

  Leaf(verb, "pseudo", "Pseudo-algebra: codegrees with multiplicity", [this, table]() {
    auto t = table();
    auto c = t.PseudoAlgebra();
    Json r;
    r["table"] = t.name();
    r["pseudo_algebra"] = Strings(c);
    return Emit("pseudo-algebra", r, Braced(c, '[', ']') + "\n");
  })->add_option("table", path_, "fixture path")->required();

  Leaf(verb, "kernels", "Degree, kernel order and codegree of every character", [this, table]() {
    auto t = table();
    Json rows = Json::array();
    std::string text;
    for (std::size_t i = 0; i < t.characters().size(); ++i) {
      const auto& c = t.characters()[i];
      const BigInt k = t.KernelOrder(i), cod = t.Codegree(i);
      Json row;
      row["character"] = c.label;
      row["degree"] = ToString(c.degree);
      row["kernel_order"] = ToString(k);
      row["codegree"] = ToString(cod);
      rows.push_back(row);
      text += c.label + " degree " + ToString(c.degree) + " kernel " + ToString(k) + " codegree " +
              ToString(cod) + "\n";
    }
    Json r;
    r["table"] = t.name();
    r["characters"] = rows;
    return Emit("kernels", r, text);
  })->add_option("table", path_, "fixture path")->required();

  Leaf(verb, "center", "Order and classes of Z(G) (the classes of size 1)", [this, table]() {
    auto t = table();
    std::vector<std::string> labels;
    for (auto i : t.CenterClasses()) labels.push_back(t.classes()[i].label);
    Json r;
    r["table"] = t.name();
    r["order"] = ToString(t.CenterOrder());
    r["classes"] = labels;
    std::string joined;
    for (const auto& l : labels) joined += (joined.empty() ? "" : ",") + l;
    return Emit("center", r, "order " + ToString(t.CenterOrder()) + " classes " + joined + "\n");
  })->add_option("table", path_, "fixture path")->required();

  Leaf(verb, "info", "Parse a table, run its structural checks and summarize it", [this, table]() {
    auto t = table();
    Json r;
    r["table"] = t.name();
    r["order"] = ToString(t.order());
    r["classes"] = t.classes().size();
    r["characters"] = t.characters().size();
    r["faithful_flags"] = t.has_faithful_flags();
    std::ostringstream s;
    s << t.name() << " order " << ToString(t.order()) << ", " << t.classes().size() << " classes, "
      << t.characters().size() << " characters" << (t.has_faithful_flags() ? ", flagged" : "") << "\n";
    return Emit("info", r, s.str());
  })->add_option("table", path_, "fixture path")->required();
}

void Cli::AddLie(CLI::App& app) {
  CLI::App* verb = app.add_subcommand("lie", "Degree and centralizer computations for groups of Lie type");
  verb->require_subcommand(1);

  auto* ss = Leaf(verb, "semisimple",
                  "Semisimple degree |G*:C(s)|_{p'} psi(1) for the E7 involution centralizer and the "
                  "order-3 centralizers in E6 and 2E6",
                  [this]() {
                    SemisimpleDatum d = datum_ == "e7"    ? E7Datum()
                                        : datum_ == "e6"  ? E6Datum()
                                        : datum_ == "2e6" ? TwistedE6Datum()
                                                          : throw InvalidArgument("datum must be e7, e6 or 2e6");
                    const OrderPolynomial deg = SemisimpleDegree(d);
                    Json r;
                    r["datum"] = datum_;
                    r["centralizer"] = d.centralizer.ToString();
                    r["degree"] = deg.ToString();
                    std::string text = "centralizer: " + d.centralizer.ToString() + "\ndegree: " + deg.ToString() + "\n";
                    if (q_ != 0) {
                      const BigInt v = SemisimpleDegreeAt(d, q_);
                      r["q"] = ToString(q_);
                      r["value"] = ToString(v);
                      text += "at q=" + ToString(q_) + ": " + ToString(v) + "\n";
                    }
                    return Emit("semisimple-degree", r, text);
                  });
  ss->add_option("--datum", datum_, "e7, e6 or 2e6")->required();
  AddBig(ss, "--q", q_, "evaluate at this q");

  auto* sd = Leaf(verb, "spin-d",
                  "D = prod (q^{2i}-1) / prod (q^i - eps^i) for Spin_{2n+1}(q); without --q the cyclotomic form",
                  [this]() {
                    if (q_ == 0) {
                      const auto s = SpinDSymbolic(n_, eps_);
                      Json r;
                      r["n"] = n_;
                      r["eps"] = eps_;
                      r["D"] = s.ToString();
                      return Emit("spin-d", r, "D = " + s.ToString() + "\n");
                    }
                    const auto s = SpinD(n_, q_, eps_);
                    Json r;
                    r["n"] = n_;
                    r["q"] = ToString(q_);
                    r["eps"] = eps_;
                    r["D"] = ToString(s.d);
                    r["D/2"] = ToString(s.half);
                    r["D/4"] = s.quarter ? Json(ToString(*s.quarter)) : Json(nullptr);
                    std::string text = "D = " + ToString(s.d) + "\nD/2 = " + ToString(s.half) + "\n";
                    text += "D/4 = " + (s.quarter ? ToString(*s.quarter) : std::string("not integral")) + "\n";
                    text += "cyclotomic: " + SpinDSymbolic(n_, eps_).ToString() + "\n";
                    return Emit("spin-d", r, text);
                  });
  sd->add_option("--n", n_, "n >= 3")->required();
  AddBig(sd, "--q", q_, "odd prime power");
  sd->add_option("--eps", eps_, "+1 or -1")->check(CLI::IsMember({1, -1}));

  auto* ce = Leaf(verb, "centralizers",
                  "All centralizer shapes Sp_{2k}(q) x Sp_{2(m-k)}(q) x prod GL^{+-} and Sp_m(q^2) x prod GL^{+-} "
                  "in Sp_{2n}(q), with p'-orders",
                  [this]() {
                    const auto all = EnumerateSymplecticCentralizers(n_, q_);
                    Json rows = Json::array();
                    std::string text;
                    for (const auto& e : all) {
                      Json row;
                      row["descriptor"] = e.descriptor.Encode();
                      row["group"] = e.descriptor.ToString();
                      row["p_prime_order"] = ToString(e.p_prime_order);
                      rows.push_back(row);
                      text += e.descriptor.Encode() + " | " + e.descriptor.ToString() + " | " +
                              ToString(e.p_prime_order) + "\n";
                    }
                    Json r;
                    r["n"] = n_;
                    r["q"] = ToString(q_);
                    r["count"] = all.size();
                    r["centralizers"] = rows;
                    return Emit("centralizers", r, text + std::to_string(all.size()) + " descriptors\n");
                  });
  ce->add_option("--n", n_, "2 <= n <= 8")->required();
  AddBig(ce, "--q", q_, "odd prime power")->required();

  auto* wd = Leaf(verb, "weil-degrees", "Weil character degrees of Sp_{2n}(q), SL_n(q) or SU_n(q)", [this]() {
    const auto degs = WeilDegrees(ParseWeilFamily(family_), n_, q_);
    Json r;
    r["family"] = family_;
    r["n"] = n_;
    r["q"] = ToString(q_);
    r["degrees"] = Strings(degs);
    return Emit("weil-degrees", r, Braced(degs) + "\n");
  });
  wd->add_option("--family", family_, "Sp, SL or SU")->required();
  wd->add_option("--n", n_, "n >= 2")->required();
  AddBig(wd, "--q", q_, "prime power")->required();
}

void Cli::AddOrders(CLI::App& app) {
  CLI::App* verb = app.add_subcommand("orders", "Group orders, p-parts and degree bounds");
  verb->require_subcommand(1);
  const std::string group_help = "group such as A12, C2(3), 2A3(2), G2(4)";

  Leaf(verb, "group", "Order of a simple group in decimal and, for Lie type, as a cyclotomic product", [this]() {
    const GroupSpec g = GroupSpec::Parse(group_);
    const BigInt order = SimpleOrder(g);
    Json r;
    r["group"] = g.Name();
    r["order"] = ToString(order);
    std::string text = g.Name() + "\norder: " + ToString(order) + "\n";
    if (g.is_lie()) {
      const OrderPolynomial poly = LieOrderPolynomial(g.family(), g.rank());
      const BigInt z = CenterSize(g);
      r["universal_order"] = poly.ToString();
      r["divided_by"] = ToString(z);
      text += "factored: " + poly.ToString() + (z == 1 ? "" : " / " + ToString(z)) + " at q=" + ToString(g.q()) + "\n";
    }
    std::string fac;
    for (const auto& [pr, e] : Factor(order)) {
      fac += (fac.empty() ? "" : " * ") + ToString(pr) + (e > 1 ? "^" + std::to_string(e) : "");
    }
    r["primes"] = fac;
    return Emit("order", r, text + "primes: " + fac + "\n");
  })->add_option("group", group_, group_help)->required();

  auto* pp = Leaf(verb, "ppart", "p-part |H|_p of a simple group", [this]() {
    const GroupSpec g = GroupSpec::Parse(group_);
    const BigInt v = PPart(SimpleOrder(g), p_);
    Json r;
    r["group"] = g.Name();
    r["p"] = ToString(p_);
    r["p_part"] = ToString(v);
    return Emit("p-part", r, ToString(v) + "\n");
  });
  pp->add_option("group", group_, group_help)->required();
  AddBig(pp, "--p", p_, "prime")->required();

  Leaf(verb, "lsz", "Smallest nontrivial cross-characteristic projective degree bound d(H)", [this]() {
    const GroupSpec g = GroupSpec::Parse(group_);
    const BigInt v = LszMinDegree(g);
    Json r;
    r["group"] = g.Name();
    r["min_degree"] = ToString(v);
    return Emit("lsz", r, ToString(v) + "\n");
  })->add_option("group", group_, group_help)->required();

  Leaf(verb, "minperm", "Minimal faithful permutation degree", [this]() {
    const GroupSpec g = GroupSpec::Parse(group_);
    const BigInt v = MinPermDegree(g);
    Json r;
    r["group"] = g.Name();
    r["min_perm_degree"] = ToString(v);
    return Emit("minperm", r, ToString(v) + "\n");
  })->add_option("group", group_, group_help)->required();

  Leaf(verb, "natural-module", "Size of the natural module of a classical group", [this]() {
    const GroupSpec g = GroupSpec::Parse(group_);
    const BigInt v = NaturalModuleSize(g);
    Json r;
    r["group"] = g.Name();
    r["size"] = ToString(v);
    return Emit("natural-module", r, ToString(v) + "\n");
  })->add_option("group", group_, group_help)->required();

  auto* ab = Leaf(verb, "alt-ppart", "|A_n|_p: the bound 2^{n-2} or p^{floor((n-1)/(p-1))} and the exact value",
                  [this]() {
                    Json r;
                    r["n"] = n_;
                    r["p"] = ToString(p_);
                    r["bound_exponent"] = AlternatingPPartBoundExponent(n_, p_);
                    r["exact_exponent"] = ExactAlternatingPPartExponent(n_, p_);
                    r["bound"] = ToString(AlternatingPPartBound(n_, p_));
                    r["exact"] = ToString(ExactAlternatingPPart(n_, p_));
                    std::string text = "bound: " + ToString(p_) + "^" + r["bound_exponent"].dump() + "\nexact: " +
                                       ToString(p_) + "^" + r["exact_exponent"].dump() + "\n";
                    return Emit("alt-ppart", r, text);
                  });
  ab->add_option("--n", n_, "n >= 5")->required();
  AddBig(ab, "--p", p_, "prime")->required();

  Leaf(verb, "muller-james", "Lower bound min{(n^4-14n^3+47n^2-34n)/24, g(n)} on Brauer degrees of A_n, n >= 11",
       [this]() {
         const BigInt v = MullerJamesBound(n_);
         Json r;
         r["n"] = n_;
         r["bound"] = ToString(v);
         return Emit("muller-james", r, ToString(v) + "\n");
       })
      ->add_option("--n", n_, "n >= 11")
      ->required();
}

void Cli::AddCyclo(CLI::App& app) {
  CLI::App* verb = app.add_subcommand("cyclo", "Cyclotomic polynomials, order polynomials and primitive prime divisors");
  verb->require_subcommand(1);

  Leaf(verb, "phi", "Coefficients of Phi_n(x)", [this]() {
    const std::string s = CyclotomicPoly(n_).ToString();
    Json r;
    r["n"] = n_;
    r["polynomial"] = s;
    return Emit("phi", r, s + "\n");
  })->add_option("n", n_, "index >= 1")->required();

  auto* ev = Leaf(verb, "eval", "Parse an order polynomial such as '2 * q^3 * Phi1^2' and evaluate it at q", [this]() {
    const OrderPolynomial poly = OrderPolynomial::Parse(path_);
    const BigRat v = poly.Evaluate(q_);
    Json r;
    r["polynomial"] = poly.ToString();
    r["q"] = ToString(q_);
    r["value"] = ToString(v);
    return Emit("eval", r, poly.ToString() + " at q=" + ToString(q_) + ": " + ToString(v) + "\n");
  });
  ev->add_option("polynomial", path_, "order polynomial text")->required();
  AddBig(ev, "--q", q_, "integer >= 2")->required();

  auto* zs = Leaf(verb, "zsigmondy", "Smallest primitive prime divisor of q^n - 1", [this]() {
    const auto z = ZsigmondyPpd(q_, n_);
    Json r;
    r["q"] = ToString(q_);
    r["n"] = n_;
    r["prime"] = z.prime ? Json(ToString(*z.prime)) : Json(nullptr);
    if (!z.prime) r["reason"] = z.reason;
    return Emit("zsigmondy", r, (z.prime ? ToString(*z.prime) : "none: " + z.reason) + "\n");
  });
  AddBig(zs, "--q", q_, "q >= 2")->required();
  zs->add_option("--n", n_, "n >= 1")->required();

  auto* fa = Leaf(verb, "factor", "Prime factorization of a positive integer", [this]() {
    Json r = Json::array();
    std::string text;
    for (const auto& [pr, e] : Factor(number_)) {
      r.push_back({ToString(pr), e});
      text += (text.empty() ? "" : " * ") + ToString(pr) + (e > 1 ? "^" + std::to_string(e) : "");
    }
    return Emit("factor", r, text + "\n");
  });
  AddBig(fa, "number", number_, "integer >= 1")->required();
}

void Cli::AddVerify(CLI::App& app) {
  CLI::App* verb = app.add_subcommand("verify", "Checkers that return verified, refuted or inapplicable");
  verb->require_subcommand(1);

  Leaf(verb, "e7", "Claim: |E7(q)|_{p'} / 2 Phi1^4 Phi2^7 Phi3 Phi4^2 Phi6^2 Phi8 Phi10 Phi14 = "
                   "1/2 Phi1^3 Phi3^2 Phi5 Phi6 Phi7 Phi9 Phi12 Phi18",
       [this]() {
         const OrderPolynomial got = SemisimpleDegree(E7Datum());
         const OrderPolynomial want = E7ExpectedDegree();
         VerificationReport rep;
         rep.claim = "e7-degree";
         rep.Param("centralizer", E7InvolutionCentralizer().ToString()).Param("degree", got.ToString());
         if (got == want) {
           rep.verdict = Verdict::kVerified;
           rep.narrative = "the quotient is exactly " + want.ToString();
         } else {
           rep.verdict = Verdict::kRefuted;
           rep.witness["expected"] = want.ToString();
           rep.witness["computed"] = got.ToString();
           rep.narrative = "the quotient differs from " + want.ToString();
         }
         return Emit(rep);
       });

  auto* eq = Leaf(verb, "eq1",
                  "Claim: no centralizer of a semisimple element of Sp_{2n}(q) has p'-order c|GL_n^{+-}(q)|_{p'} "
                  "with c in {2,4,8} (exhaustive enumeration)",
                  [this]() { return Emit(VerifyEq1NoSolution(n_, q_)); });
  eq->add_option("--n", n_, "3 <= n <= 8")->required();
  AddBig(eq, "--q", q_, "odd prime power")->required();

  auto* te = Leaf(verb, "thm-e",
                  "Claim: a quasisimple G with center of prime order r has a faithful chi with chi(1)/r not a "
                  "degree of G/Z, so cod(G) is not contained in cod(G/Z)",
                  [this]() { return Emit(VerifyThmEInstance(CharacterTable::FromFile(path_))); });
  te->add_option("table", path_, "fixture path")->required();
  te->add_flag("--quotient-of-center", quotient_of_center_,
               "compare against G/Z(G) read off from characters trivial on the center (the only mode)");

  auto* cs = Leaf(verb, "cod-subset", "Claim: cod(G) is a subset of cod(H); refutations list the missing codegrees",
                  [this]() {
                    return Emit(CodegreeSubset(CharacterTable::FromFile(path_), CharacterTable::FromFile(path2_)));
                  });
  cs->add_option("G", path_, "fixture for G")->required();
  cs->add_option("H", path2_, "fixture for H")->required();

  auto* lp = Leaf(verb, "lem-proj",
                  "Claim: for N central and theta in Irr(N), the least chi(1)_p over chi lying over theta "
                  "satisfies m_p^2 <= |G/N|_p",
                  [this]() {
                    const auto t = CharacterTable::FromFile(path_);
                    std::vector<std::size_t> idx;
                    for (const auto& label : SplitCommas(classes_)) {
                      std::size_t i = 0;
                      while (i < t.classes().size() && t.classes()[i].label != label) ++i;
                      if (i == t.classes().size()) throw InvalidArgument("no class '" + label + "'");
                      idx.push_back(i);
                    }
                    std::vector<CycloValue> theta;
                    for (const auto& v : SplitCommas(theta_)) theta.push_back(ParseCycloToken(v));
                    return Emit(CheckProjectiveBound(t, idx, theta));
                  });
  lp->add_option("table", path_, "fixture path")->required();
  lp->add_option("--classes", classes_, "comma-separated central class labels, identity included")->required();
  lp->add_option("--theta", theta_, "comma-separated values of theta on those classes")->required();

  auto* pb = Leaf(verb, "prop-bra",
                  "Claim: the codegree conjecture holds for H when p^{2d} > |H|_p, d the least nontrivial "
                  "p-Brauer degree (strict inequality)",
                  [this]() { return Emit(CheckPropBra(GroupSpec::Parse(group_), p_, d_)); });
  pb->add_option("group", group_, "group such as A12 or C2(3)")->required();
  AddBig(pb, "--p", p_, "prime dividing |H|")->required();
  AddBig(pb, "--d", d_, "least nontrivial p-Brauer degree")->required();

  auto* pt = Leaf(verb, "prop-tech",
                  "Claim: p^{2d(H)} > |H|_p across the sweep: sporadic rows, alternating via the Mueller/James "
                  "bound, cross characteristic via the smallest projective degree, defining characteristic via "
                  "min_perm_degree(H)^2 > |H|_p",
                  [this]() {
                    SweepOptions o;
                    o.max_rank = max_rank_;
                    o.max_q = max_q_;
                    o.n_min = min_n_;
                    o.n_max = max_n_ == 0 ? kDefaultMaxN : static_cast<unsigned>(max_n_);
                    if (max_n_ > kMaxExactAlternatingDegree) throw InvalidArgument("--max-n too large");
                    o.allow_large = allow_large_;
                    if (!group_.empty()) o.only = GroupSpec::Parse(group_);
                    return Emit(VerifyPropTech(ParsePropTechCase(case_), o));
                  });
  pt->add_option("case", case_, "sporadic, alternating, cross-char or defining-char")->required();
  pt->add_option("--max-rank", max_rank_, "largest rank swept (default 8)");
  pt->add_option("--max-q", max_q_, "largest q swept (default 9)");
  pt->add_option("--max-n", max_n_, "largest n for the alternating case (default 300)");
  pt->add_option("--min-n", min_n_, "smallest n for the alternating case (default 11)");
  pt->add_option("--group", group_, "restrict a Lie-type sweep to one group");
  pt->add_flag("--allow-large", allow_large_, "permit sweeps beyond rank 8, q 9, n 300");

  auto* bs = Leaf(verb, "basic-spin", "Claim: 2^{floor((n-2)/2)-1} = n-1 has no solution with n >= 10", [this]() {
    return Emit(CheckAlternatingBasicSpin(max_n_ == 0 ? 1'000'000 : max_n_));
  });
  bs->add_option("--max-n", max_n_, "upper end of the scan (default 1000000)");

  auto* sp = Leaf(verb, "split",
                  "Claim: in a split extension N:H with N elementary abelian p, some faithful character has "
                  "degree prime to p (needs a faithfulness column)",
                  [this]() { return Emit(CheckSplitExtensionClaim(CharacterTable::FromFile(path_), p_)); });
  sp->add_option("table", path_, "fixture path")->required();
  AddBig(sp, "--p", p_, "the prime of N")->required();

  auto* we = Leaf(verb, "weil",
                  "Claim: each Weil degree divided by a prime r dividing the center is below the smallest "
                  "nontrivial degree of the simple quotient",
                  [this]() { return Emit(CheckWeilBelowMinDegree(ParseWeilFamily(family_), n_, q_)); });
  we->add_option("--family", family_, "Sp, SL or SU")->required();
  we->add_option("--n", n_, "n >= 2")->required();
  AddBig(we, "--q", q_, "prime power")->required();
}

int Cli::Run(const std::vector<std::string>& args) {
  CLI::App app{"Exact checks on character codegrees of simple and quasisimple groups", "codeg"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", json_, "machine-readable output");
  app.add_flag("--timestamps", timestamps_, "include the generation time");
  AddTable(app);
  AddLie(app);
  AddOrders(app);
  AddCyclo(app);
  AddVerify(app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out_, err_);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out_, err_);
  } catch (const CLI::ParseError& e) {
    err_ << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err_ << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    return action_();
  } catch (const Error& e) {
    err_ << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Cli(out, err).Run(args);
}

}  // namespace codeg
