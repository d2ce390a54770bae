"""Tensor products of monomial star algebras.

The flattened basis index of e_{i} (x) e_{j} is i*dim2 + j; products and the
star act componentwise, so all the structure checks written for monomial
algebras apply to tensor algebras unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import cd
from .errors import UnsupportedFactor


@dataclass(frozen=True)
class TensorAlgebra:
    left: cd.CompositionAlgebra
    right: cd.CompositionAlgebra
    dim: int
    mul_sign: tuple[tuple[int, ...], ...]
    mul_index: tuple[tuple[int, ...], ...]
    star_signs: tuple[int, ...]
    name: str

    def flat(self, i, j):
        return i * self.right.dim + j

    def unflat(self, k):
        return divmod(k, self.right.dim)


def tensor_product(a, b):
    """K1 (x) K2 with componentwise product and star."""
    if not isinstance(a, cd.CompositionAlgebra) or not isinstance(
        b, cd.CompositionAlgebra
    ):
        raise UnsupportedFactor("tensor factors must be doubling algebras")
    d1, d2 = a.dim, b.dim
    d = d1 * d2
    sign = [[0] * d for _ in range(d)]
    index = [[0] * d for _ in range(d)]
    for i1 in range(d1):
        for i2 in range(d2):
            fi = i1 * d2 + i2
            for j1 in range(d1):
                s1 = a.mul_sign[i1][j1]
                k1 = a.mul_index[i1][j1]
                for j2 in range(d2):
                    fj = j1 * d2 + j2
                    sign[fi][fj] = s1 * b.mul_sign[i2][j2]
                    index[fi][fj] = k1 * d2 + b.mul_index[i2][j2]
    star = tuple(
        a.star_signs[i1] * b.star_signs[i2]
        for i1 in range(d1)
        for i2 in range(d2)
    )
    return TensorAlgebra(
        left=a,
        right=b,
        dim=d,
        mul_sign=tuple(map(tuple, sign)),
        mul_index=tuple(map(tuple, index)),
        star_signs=star,
        name="%s*%s" % (a.name, b.name),
    )


LEFT = "L"
RIGHT = "R"


@dataclass(frozen=True)
class TensorDerivation:
    """A derivation acting on one tensor factor."""

    side: str
    map: tuple


def embed_side(t, side, m):
    """Matrix of (D (x) 1) or (1 (x) D) on the flattened basis."""
    d1, d2 = t.left.dim, t.right.dim
    d = d1 * d2
    rows = [[Fraction(0)] * d for _ in range(d)]
    if side == LEFT:
        for r1 in range(d1):
            for c1 in range(d1):
                x = m[r1][c1]
                if x != 0:
                    for j in range(d2):
                        rows[r1 * d2 + j][c1 * d2 + j] = x
    else:
        for r2 in range(d2):
            for c2 in range(d2):
                x = m[r2][c2]
                if x != 0:
                    for i in range(d1):
                        rows[i * d2 + r2][i * d2 + c2] = x
    return tuple(map(tuple, rows))


def tensor_derivation_basis(t, star_compatible=False):
    """Basis of der(K1) (+) der(K2) as one-sided maps, left factor first.

    With star_compatible, each factor span is restricted to maps commuting
    with that factor's star.
    """
    left = cd.derivation_basis(t.left, star_compatible=star_compatible)
    right = cd.derivation_basis(t.right, star_compatible=star_compatible)
    return [TensorDerivation(LEFT, m) for m in left] + [
        TensorDerivation(RIGHT, m) for m in right
    ]


def tensor_derivation_map(t, x1, y1, x2, y2):
    """<x1,y1> D_{x2,y2} + <x2,y2> D_{x1,y1} as one-sided summands.

    Returns (left_map, right_map); either may be None when its weight is zero.
    """
    w2 = cd.inner_product(t.left, x1, y1)
    w1 = cd.inner_product(t.right, x2, y2)
    left = None
    right = None
    if w1 != 0:
        m = cd.derivation_map(t.left, x1, y1)
        left = tuple(tuple(w1 * x for x in row) for row in m)
    if w2 != 0:
        m = cd.derivation_map(t.right, x2, y2)
        right = tuple(tuple(w2 * x for x in row) for row in m)
    return left, right


def _leibniz_holds(t, m):
    for i in range(t.dim):
        for j in range(t.dim):
            if any(x != 0 for x in cd.leibniz_defect(t, m, i, j)):
                return (i, j)
    return None


def check_tensor_derivation_formula(t, sample=None, seed=0):
    """Verify the one-sided combination is a derivation of the tensor algebra.

    Scans basis 4-tuples (x1, y1, x2, y2); exhaustive for dim <= 16, otherwise
    a seeded sample (plus every tuple is checked factor-side, which is cheap).
    Returns None or the offending 4-tuple.
    """
    import random

    d1, d2 = t.left.dim, t.right.dim
    tuples = [
        (a, b, c, d)
        for a in range(d1)
        for b in range(d1)
        for c in range(d2)
        for d in range(d2)
    ]
    if t.dim > 16:
        rng = random.Random(seed)
        count = sample if sample is not None else 40
        tuples = rng.sample(tuples, min(count, len(tuples)))
    for a, b, c, d in tuples:
        x1 = cd.basis_element(t.left, a)
        y1 = cd.basis_element(t.left, b)
        x2 = cd.basis_element(t.right, c)
        y2 = cd.basis_element(t.right, d)
        left, right = tensor_derivation_map(t, x1, y1, x2, y2)
        if left is None and right is None:
            continue
        zero_rows = tuple(tuple(Fraction(0) for _ in range(t.dim)) for _ in range(t.dim))
        m = zero_rows
        if left is not None:
            m = _map_add(m, embed_side(t, LEFT, left))
        if right is not None:
            m = _map_add(m, embed_side(t, RIGHT, right))
        if _leibniz_holds(t, m) is not None:
            return (a, b, c, d)
    return None


def _map_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))
