# Copyright 2026 The codeg Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import json
import math
import os
import random

import pytest
import sympy

import codeg

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "..", "fixtures")


def fixture(name):
    return os.path.join(FIXTURES, name + ".chartab")


def test_big_ints_cross_the_boundary_exactly():
    q = 2**127 - 1
    assert codeg.is_prime(q)
    assert codeg.cyclotomic_eval(1, q + 1) == q
    assert codeg.p_part(2**200 * 3, 2) == 2**200


def test_cyclotomic_values_match_sympy():
    x = sympy.symbols("x")
    rng = random.Random(0x5EED2026)
    for _ in range(60):
        n, q = rng.randint(1, 60), rng.randint(2, 50)
        assert codeg.cyclotomic_eval(n, q) == sympy.cyclotomic_poly(n, x).subs(x, q)


def test_factor_matches_sympy():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 10**18)
        assert dict(codeg.factor(n)) == sympy.factorint(n)


def test_zsigmondy_prime_is_primitive():
    for q in range(2, 8):
        for n in range(3, 16):
            if (q, n) == (2, 6):
                assert codeg.zsigmondy(q, n) is None
                continue
            r = codeg.zsigmondy(q, n)
            assert (q**n - 1) % r == 0
            assert all((q**k - 1) % r for k in range(1, n))


def test_group_orders():
    assert codeg.group_order("A1(4)") == 60
    assert codeg.group_order("A12") == math.factorial(12) // 2
    assert codeg.group_order("G2(3)") == 4245696
    assert codeg.group_name("A12") == "A12"


def test_codegree_sets_of_small_tables():
    assert codeg.codegrees(fixture("a5")) == [1, 12, 15, 20]
    assert codeg.degrees(fixture("a5")) == [1, 3, 4, 5]
    assert set(codeg.codegrees(fixture("a5"))) <= set(codeg.codegrees(fixture("sl25")))


def test_e7_semisimple_degree_is_an_integer_for_odd_q():
    for q in (3, 5, 7):
        d = codeg.semisimple_degree_e7(q)
        assert isinstance(d, int) and d > 0


def test_reports_are_dicts():
    r = codeg.verify_prop_bra("A1(7)", 7, 3)
    assert r["schema"] == "codeg-report/1"
    assert r["report"]["verdict"] == "verified"
    assert codeg.verify_eq1(3, 3)["report"]["verdict"] == "verified"
    assert codeg.verify_thm_e(fixture("sl25"))["report"]["verdict"] == "verified"


def test_errors_surface_as_value_error():
    with pytest.raises(codeg.CodegError):
        codeg.group_order("not a group")
    with pytest.raises(ValueError):
        codeg.zsigmondy(1, 3)


def test_run_matches_the_command_line():
    code, out, err = codeg.run(["--json", "verify", "e7"])
    assert code == 0 and err == ""
    assert json.loads(out)["report"]["verdict"] == "verified"
    code, _, err = codeg.run(["verify", "no-such-claim"])
    assert code == 3 and "error" in err
