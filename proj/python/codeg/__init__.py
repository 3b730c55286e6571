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


"""Exact arithmetic and verification routines for character codegrees."""

from ._codeg import (
    CodegError,
    codegrees,
    cyclotomic_eval,
    degrees,
    factor,
    group_name,
    group_order,
    is_prime,
    lsz_min_degree,
    min_perm_degree,
    p_part,
    run,
    semisimple_degree_e7,
    spin_d,
    verify_eq1,
    verify_prop_bra,
    verify_prop_tech,
    verify_thm_e,
    zsigmondy,
)

__all__ = [
    "CodegError",
    "codegrees",
    "cyclotomic_eval",
    "degrees",
    "factor",
    "group_name",
    "group_order",
    "is_prime",
    "lsz_min_degree",
    "min_perm_degree",
    "p_part",
    "run",
    "semisimple_degree_e7",
    "spin_d",
    "verify_eq1",
    "verify_prop_bra",
    "verify_prop_tech",
    "verify_thm_e",
    "zsigmondy",
]
