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

"""Builds fixtures/2e4a5.chartab: the character table of 2^4:A5, with A5
acting as SL2(4) on F4^2 = F2^4.

The table is computed, not transcribed: classes by brute-force conjugation
in the 960-element affine group, the five characters of A5 by inflation,
and the four faithful degree-15 characters by inducing the extensions of a
nontrivial linear character of N from its inertia group. Orthogonality is
checked before anything is written.

Usage: python3 tools/gen_2e4a5.py [output-path]
"""

import cmath
import itertools
import sys
from fractions import Fraction

# F4 = F2[w]/(w^2+w+1), elements 0..3 as bit vectors over (1, w).
def f4_mul(a, b):
    r = 0
    for i in range(2):
        if b >> i & 1:
            r ^= a << i
    if r & 4:
        r ^= 0b111
    return r


def mat_mul(m, n):
    (a, b, c, d), (e, f, g, h) = m, n
    return (f4_mul(a, e) ^ f4_mul(b, g), f4_mul(a, f) ^ f4_mul(b, h),
            f4_mul(c, e) ^ f4_mul(d, g), f4_mul(c, f) ^ f4_mul(d, h))


def mat_vec(m, v):
    a, b, c, d = m
    x, y = v & 3, v >> 2
    return (f4_mul(a, x) ^ f4_mul(b, y)) | (f4_mul(c, x) ^ f4_mul(d, y)) << 2


IDENT = (1, 0, 0, 1)
SL24 = [m for m in itertools.product(range(4), repeat=4)
        if f4_mul(m[0], m[3]) ^ f4_mul(m[1], m[2]) == 1]
assert len(SL24) == 60

# (v, M) is x -> Mx + v.
def mul(g, h):
    return (mat_vec(g[1], h[0]) ^ g[0], mat_mul(g[1], h[1]))


G = [(v, m) for v in range(16) for m in SL24]
INV = {}
for g in G:
    for h in G:
        if mul(g, h) == (0, IDENT):
            INV[g] = h
            break


def order(g):
    k, x = 1, g
    while x != (0, IDENT):
        x, k = mul(x, g), k + 1
    return k


def conj(x, g):
    return mul(mul(x, g), INV[x])


# Conjugacy classes.
seen, classes = set(), []
for g in G:
    if g in seen:
        continue
    cls = {conj(x, g) for x in G}
    seen |= cls
    classes.append((order(g), len(cls), g, cls))
classes.sort(key=lambda c: (c[0], c[1], c[2] != (0, IDENT)))
labels, count = [], {}
for o, size, _, _ in classes:
    count[o] = count.get(o, 0) + 1
    labels.append(f"{o}{'abcdefgh'[count[o] - 1]}")
reps = [c[2] for c in classes]

# A5 class of the image in SL2(4).
g5 = next(m for m in SL24 if order((0, m)) == 5)
g5_class = {mat_mul(mat_mul(x, g5), INV[(0, x)][1]) for x in SL24}


def a5_class(m):
    o = order((0, m))
    if o != 5:
        return {1: "1a", 2: "2a", 3: "3a"}[o]
    return "5a" if m in g5_class else "5b"


Z5 = cmath.exp(2j * cmath.pi / 5)
A5 = {  # value tokens and numeric values per A5 class
    "1": {"1a": "1", "2a": "1", "3a": "1", "5a": "1", "5b": "1"},
    "3a": {"1a": "3", "2a": "-1", "3a": "0", "5a": "-z(5)^2-z(5)^3", "5b": "-z(5)-z(5)^4"},
    "3b": {"1a": "3", "2a": "-1", "3a": "0", "5a": "-z(5)-z(5)^4", "5b": "-z(5)^2-z(5)^3"},
    "4": {"1a": "4", "2a": "0", "3a": "1", "5a": "-1", "5b": "-1"},
    "5": {"1a": "5", "2a": "1", "3a": "-1", "5a": "0", "5b": "0"},
}
NUM = {"-z(5)^2-z(5)^3": -(Z5 ** 2) - Z5 ** 3, "-z(5)-z(5)^4": -Z5 - Z5 ** 4}


def numeric(tok):
    return NUM[tok] if tok in NUM else complex(int(tok))


chars = []  # (label, degree, tokens, numeric values)
for lab, row in A5.items():
    toks = [row[a5_class(g[1])] for g in reps]
    chars.append((lab, int(toks[0]), toks, [numeric(t) for t in toks]))

# Faithful characters: induce lambda_w * mu from the inertia group T = N:S.
def lam(w, v):
    return -1 if bin(w & v).count("1") % 2 else 1


w = 1
N = [(v, IDENT) for v in range(16)]
T = [t for t in G if all(lam(w, conj(t, n)[0]) == lam(w, n[0]) for n in N)]
S = [t[1] for t in T if t[0] == 0]
assert len(T) == 64 and len(S) == 4
s1 = next(s for s in S if s != IDENT)
s2 = next(s for s in S if s not in (IDENT, s1))
coords = {IDENT: (0, 0), s1: (1, 0), s2: (0, 1), mat_mul(s1, s2): (1, 1)}
Tset = set(T)
for i, (e1, e2) in enumerate(itertools.product((1, -1), repeat=2)):
    def psi(t):
        a, b = coords[t[1]]
        return lam(w, t[0]) * e1 ** a * e2 ** b
    vals = []
    for g in reps:
        s = sum(psi(y) for y in (conj(x, g) for x in G) if y in Tset)
        assert s % len(T) == 0
        vals.append(s // len(T))
    chars.append((f"15{'abcd'[i]}", vals[0], [str(v) for v in vals], [complex(v) for v in vals]))

# Orthonormality.
sizes = [c[1] for c in classes]
for a in chars:
    for b in chars:
        ip = sum(s * x * y.conjugate() for s, x, y in zip(sizes, a[3], b[3])) / len(G)
        assert abs(ip - (a is b)) < 1e-9, (a[0], b[0], ip)
assert sum(c[1] ** 2 for c in chars) == len(G) and len(chars) == len(classes)

out = ["CHARTAB 1",
       "# 2^4:A5 with A5 = SL2(4) acting on the natural module F4^2; N = 2^4.",
       "# Generated by tools/gen_2e4a5.py. The flag column marks faithful characters.",
       f"group 2^4:A5 order {len(G)}"]
out += [f"class {l} {s}" for l, s in zip(labels, sizes)]
for lab, deg, toks, vals in chars:
    faithful = all(abs(v - deg) > 1e-9 for v in vals[1:])
    out.append(f"char {lab} {deg} {'faithful' if faithful else 'nonfaithful'} : " + " ".join(toks))
path = sys.argv[1] if len(sys.argv) > 1 else "fixtures/2e4a5.chartab"
with open(path, "w") as f:
    f.write("\n".join(out) + "\n")
print(f"wrote {path}: {len(classes)} classes, degrees {[c[1] for c in chars]}")
