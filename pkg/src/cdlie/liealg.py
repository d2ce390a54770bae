"""Lie algebras as exact sparse structure constants.

Structure constants are stored for i < j only ([e_i, e_j] = sum_k c^k_ij e_k,
antisymmetry fills in the rest).  The heavy scans (Jacobi, Killing) run on
integer-scaled copies of the table.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import NotSemisimple
from .linalg import kernel_dimension, symmetric_inertia


@dataclass
class LieAlgebra:
    dim: int
    basis: list[str]
    sc: list[tuple[int, int, int, Fraction]]
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self._rows = None
        self._int_rows = None
        self._den = None

    def rows(self):
        """dict (i,j) -> tuple of (k, Fraction), for both orders of (i,j)."""
        if self._rows is None:
            acc = {}
            for i, j, k, v in self.sc:
                acc.setdefault((i, j), []).append((k, v))
                acc.setdefault((j, i), []).append((k, -v))
            self._rows = {p: tuple(entries) for p, entries in acc.items()}
        return self._rows

    def int_rows(self):
        """Same rows scaled by the common denominator, values as ints."""
        if self._int_rows is None:
            den = 1
            for _, _, _, v in self.sc:
                den = den * v.denominator // gcd(den, v.denominator)
            self._den = den
            acc = {}
            for i, j, k, v in self.sc:
                w = v.numerator * (den // v.denominator)
                acc.setdefault((i, j), []).append((k, w))
                acc.setdefault((j, i), []).append((k, -w))
            self._int_rows = {p: tuple(entries) for p, entries in acc.items()}
        return self._int_rows

    def denominator(self):
        self.int_rows()
        return self._den

    def bracket(self, x, y):
        """Bracket of two coefficient vectors."""
        rows = self.rows()
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                row = rows.get((i, j))
                if row:
                    c = xi * yj
                    for k, v in row:
                        out[k] += c * v
        return tuple(out)


def check_jacobi(l):
    """Exhaustive scan over basis triples i < j < k.

    Returns None, or (i, j, k, residual) for the first violated triple, with
    residual a dict index -> rational coefficient.
    """
    rows = l.int_rows()
    dim = l.dim
    den = l.denominator()
    get = rows.get
    for i in range(dim):
        for j in range(i + 1, dim):
            rij = get((i, j))
            for k in range(j + 1, dim):
                acc = {}
                if rij:
                    for m, v in rij:
                        r2 = get((m, k))
                        if r2:
                            for t, w in r2:
                                acc[t] = acc.get(t, 0) + v * w
                rjk = get((j, k))
                if rjk:
                    for m, v in rjk:
                        r2 = get((m, i))
                        if r2:
                            for t, w in r2:
                                acc[t] = acc.get(t, 0) + v * w
                rki = get((k, i))
                if rki:
                    for m, v in rki:
                        r2 = get((m, j))
                        if r2:
                            for t, w in r2:
                                acc[t] = acc.get(t, 0) + v * w
                for t, w in acc.items():
                    if w:
                        residual = {
                            t2: Fraction(w2, den * den)
                            for t2, w2 in sorted(acc.items())
                            if w2
                        }
                        return (i, j, k, residual)
    return None


def killing_matrix(l):
    """B_ab = tr(ad_a ad_b), exact."""
    rows = l.int_rows()
    den = l.denominator()
    # ad_i maps e_j -> v e_k for (k, v) in rows[(i, j)]
    t = {}
    for (i, j), entries in rows.items():
        for k, v in entries:
            t.setdefault((j, k), []).append((i, v))
    b = [[0] * l.dim for _ in range(l.dim)]
    for (c, d), lst1 in t.items():
        lst2 = t.get((d, c))
        if not lst2:
            continue
        for a, v in lst1:
            row = b[a]
            for bb, w in lst2:
                row[bb] += v * w
    scale = Fraction(1, den * den)
    return [[x * scale for x in row] for row in b]


@dataclass
class KillingReport:
    dim: int
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def character(self):
        return self.n_plus - self.n_minus

    def as_dict(self):
        return {
            "dim": self.dim,
            "n_plus": self.n_plus,
            "n_minus": self.n_minus,
            "n_zero": self.n_zero,
            "character": self.character,
        }


def killing_report(l, require_semisimple=False):
    b = killing_matrix(l)
    n_plus, n_minus, n_zero = symmetric_inertia(b)
    if require_semisimple and n_zero != 0:
        raise NotSemisimple(
            "Killing form has %d-dimensional radical" % n_zero
        )
    return KillingReport(l.dim, n_plus, n_minus, n_zero)


def invariance_check(l, samples=10000, seed=0, exhaustive_limit=60):
    """B([x,y],z) + B(y,[x,z]) = 0 on basis triples.

    Exhaustive when dim <= exhaustive_limit, otherwise a seeded sample of at
    least `samples` triples.  Returns None or the violating triple.
    """
    b = killing_matrix(l)
    rows = l.rows()

    def defect(x, y, z):
        acc = Fraction(0)
        row = rows.get((x, y))
        if row:
            for k, v in row:
                acc += v * b[k][z]
        row = rows.get((x, z))
        if row:
            for k, v in row:
                acc += v * b[y][k]
        return acc

    dim = l.dim
    if dim <= exhaustive_limit:
        for x in range(dim):
            for y in range(dim):
                for z in range(y, dim):
                    if defect(x, y, z) != 0:
                        return (x, y, z)
        return None
    rng = random.Random(seed)
    for _ in range(samples):
        x = rng.randrange(dim)
        y = rng.randrange(dim)
        z = rng.randrange(dim)
        if defect(x, y, z) != 0:
            return (x, y, z)
    return None


def ad_matrix(l, x):
    """Matrix of ad_x on the basis."""
    rows = l.rows()
    m = [[Fraction(0)] * l.dim for _ in range(l.dim)]
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j in range(l.dim):
            row = rows.get((i, j))
            if row:
                for k, v in row:
                    m[k][j] += xi * v
    return m


def rank_estimate(l, trials=5, seed=0, coeff_bound=5):
    """min over seeded random elements of dim ker(ad_x).

    An upper bound for the rank that is almost always exact.
    """
    rng = random.Random(seed)
    best = l.dim
    for _ in range(trials):
        x = [Fraction(rng.randint(-coeff_bound, coeff_bound)) for _ in range(l.dim)]
        m = ad_matrix(l, x)
        best = min(best, kernel_dimension(m, l.dim))
        if best == 0:
            break
    return best


# ---------------------------------------------------------------------------
# serialization

def _frac_str(v):
    return str(v)


def _frac_parse(s):
    return Fraction(s)


def to_document(l):
    return {
        "kind": "lie_algebra",
        "dim": l.dim,
        "basis": list(l.basis),
        "sc": [[i, j, k, _frac_str(v)] for i, j, k, v in l.sc],
        "meta": l.meta,
    }


def from_document(doc):
    if doc.get("kind") != "lie_algebra":
        raise ValueError("not a lie_algebra document")
    sc = [(int(i), int(j), int(k), _frac_parse(v)) for i, j, k, v in doc["sc"]]
    return LieAlgebra(
        dim=int(doc["dim"]),
        basis=list(doc["basis"]),
        sc=sc,
        meta=dict(doc.get("meta", {})),
    )


def dumps(l):
    return json.dumps(to_document(l), indent=1, ensure_ascii=True) + "\n"


def loads(text):
    return from_document(json.loads(text))


def save(l, path):
    with open(path, "w") as fh:
        fh.write(dumps(l))


def load(path):
    with open(path) as fh:
        return loads(fh.read())


def sort_sc(sc):
    return sorted(sc, key=lambda e: (e[0], e[1], e[2]))
