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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "codeg/bignum.hpp"
#include "codeg/chartab.hpp"
#include "codeg/cli.hpp"
#include "codeg/conjecture.hpp"
#include "codeg/cyclotomic.hpp"
#include "codeg/errors.hpp"
#include "codeg/group_data.hpp"
#include "codeg/group_spec.hpp"
#include "codeg/lie_verify.hpp"
#include "codeg/number_theory.hpp"
#include "codeg/report.hpp"

namespace py = pybind11;

// Python int <-> mpz_class through the decimal string.
namespace pybind11::detail {
template <>
struct type_caster<codeg::BigInt> {
  PYBIND11_TYPE_CASTER(codeg::BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = codeg::BigInt(py::str(src).cast<std::string>());
    return true;
  }
  static handle cast(const codeg::BigInt& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

using codeg::BigInt;

py::object ReportToDict(const codeg::VerificationReport& r) {
  return py::module_::import("json").attr("loads")(r.RenderJson());
}

std::vector<BigInt> SetToList(const std::set<BigInt>& s) { return {s.begin(), s.end()}; }

}  // namespace

PYBIND11_MODULE(_codeg, m) {
  m.doc() = "Exact arithmetic and verification routines for character codegrees.";
  py::register_exception<codeg::Error>(m, "CodegError", PyExc_ValueError);

  m.def("cyclotomic_eval",
        [](unsigned n, const BigInt& q) { return codeg::CyclotomicPoly(n).Evaluate(q); },
        py::arg("n"), py::arg("q"));
  m.def("is_prime", &codeg::IsPrime, py::arg("n"));
  m.def("factor", &codeg::Factor, py::arg("n"));
  m.def("p_part", &codeg::PPart, py::arg("n"), py::arg("p"));
  m.def(
      "zsigmondy",
      [](const BigInt& q, unsigned n) -> py::object {
        auto z = codeg::ZsigmondyPpd(q, n);
        if (!z.prime) return py::none();
        return py::cast(*z.prime);
      },
      py::arg("q"), py::arg("n"), "Smallest primitive prime divisor of q^n - 1, or None.");

  m.def(
      "group_order",
      [](const std::string& g) { return codeg::SimpleOrder(codeg::GroupSpec::Parse(g)); },
      py::arg("group"));
  m.def(
      "group_name",
      [](const std::string& g) { return codeg::GroupSpec::Parse(g).Name(); },
      py::arg("group"));
  m.def(
      "min_perm_degree",
      [](const std::string& g) { return codeg::MinPermDegree(codeg::GroupSpec::Parse(g)); },
      py::arg("group"));
  m.def(
      "lsz_min_degree",
      [](const std::string& g) { return codeg::LszMinDegree(codeg::GroupSpec::Parse(g)); },
      py::arg("group"));

  m.def(
      "codegrees",
      [](const std::string& path) {
        return SetToList(codeg::CharacterTable::FromFile(path).Codegrees());
      },
      py::arg("path"), "Codegree set of a character table file, sorted.");
  m.def(
      "degrees",
      [](const std::string& path) {
        return SetToList(codeg::CharacterTable::FromFile(path).Degrees());
      },
      py::arg("path"));

  m.def(
      "semisimple_degree_e7",
      [](const BigInt& q) { return codeg::SemisimpleDegreeAt(codeg::E7Datum(), q); },
      py::arg("q"));
  m.def(
      "spin_d",
      [](unsigned n, const BigInt& q, int eps) { return codeg::SpinD(n, q, eps).d; },
      py::arg("n"), py::arg("q"), py::arg("eps") = 1);

  m.def(
      "verify_prop_bra",
      [](const std::string& g, const BigInt& p, const BigInt& d) {
        return ReportToDict(codeg::CheckPropBra(codeg::GroupSpec::Parse(g), p, d));
      },
      py::arg("group"), py::arg("p"), py::arg("d"));
  m.def(
      "verify_prop_tech",
      [](const std::string& which, unsigned max_rank, const BigInt& max_q, unsigned max_n) {
        codeg::SweepOptions opts;
        opts.max_rank = max_rank;
        opts.max_q = max_q;
        opts.n_max = max_n;
        return ReportToDict(codeg::VerifyPropTech(codeg::ParsePropTechCase(which), opts));
      },
      py::arg("case"), py::arg("max_rank") = codeg::kDefaultMaxRank,
      py::arg("max_q") = BigInt(codeg::kDefaultMaxQ), py::arg("max_n") = codeg::kDefaultMaxN);
  m.def(
      "verify_eq1",
      [](unsigned n, const BigInt& q) { return ReportToDict(codeg::VerifyEq1NoSolution(n, q)); },
      py::arg("n"), py::arg("q"));
  m.def(
      "verify_thm_e",
      [](const std::string& path) {
        return ReportToDict(codeg::VerifyThmEInstance(codeg::CharacterTable::FromFile(path)));
      },
      py::arg("path"));

  // Same behaviour as the command-line tool; returns (exit code, stdout, stderr).
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = codeg::RunCli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
