"""Cayley-Dickson composition algebras with exact rational arithmetic.

An algebra is stored as a monomial multiplication table: basis elements
multiply as e_i e_j = s(i,j) e_{pi(i,j)} with s(i,j) in {+1,-1}.  Doubling a
dim-h algebra produces pairs (a, b) written on indices (i, i + h); the unit
adjoined at stage m is e_{2^(m-1)} and squares to -eta_m, so a '+' stage
(elliptic) gives i^2 = -1 and a '-' stage (hyperbolic) gives i^2 = +1.

Pair product:  (a, b)(c, d) = (a c - eta d* b,  d a + b c*)
Star:          (a, b)* = (a*, -b)

Elements are plain tuples of Fraction.  No floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import product

from .errors import NotAntiautomorphism, UnsupportedVariant
from .linalg import decompose_in_rref, nullspace, rref

ELLIPTIC = 1
HYPERBOLIC = -1

# named sign patterns; '+' = elliptic stage (adjoined unit squares to -1)
NAMED_SIGNS = {
    "R": "",
    "C": "+",
    "Cs": "-",
    "H": "++",
    "Hs": "+-",
    "O": "+++",
    "Os": "++-",
}


@dataclass(frozen=True)
class CompositionAlgebra:
    """Monomial star algebra produced by iterated doubling."""

    signs: tuple[int, ...]
    dim: int
    mul_sign: tuple[tuple[int, ...], ...]
    mul_index: tuple[tuple[int, ...], ...]
    star_signs: tuple[int, ...]
    star_variant: str
    name: str


def parse_signs(text):
    """'++-' -> (1, 1, -1)."""
    out = []
    for ch in text:
        if ch == "+":
            out.append(ELLIPTIC)
        elif ch == "-":
            out.append(HYPERBOLIC)
        else:
            raise ValueError("sign characters must be '+' or '-': %r" % text)
    return tuple(out)


def signs_text(signs):
    return "".join("+" if s == ELLIPTIC else "-" for s in signs)


def _double(mul_sign, mul_index, eta, star):
    """One doubling step; star is the standard conjugation of the inner algebra."""
    h = len(mul_sign)
    d = 2 * h
    sign = [[0] * d for _ in range(d)]
    index = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            if i < h and j < h:
                s, k = mul_sign[i][j], mul_index[i][j]
            elif i < h and j >= h:
                # (a,0)(0,d) = (0, d a)
                s, k = mul_sign[j - h][i], h + mul_index[j - h][i]
            elif i >= h and j < h:
                # (0,b)(c,0) = (0, b c*)
                s = star[j] * mul_sign[i - h][j]
                k = h + mul_index[i - h][j]
            else:
                # (0,b)(0,d) = (-eta d* b, 0)
                s = -eta * star[j - h] * mul_sign[j - h][i - h]
                k = mul_index[j - h][i - h]
            sign[i][j] = s
            index[i][j] = k
    return tuple(map(tuple, sign)), tuple(map(tuple, index))


def _name_for(signs, variant):
    text = signs_text(signs)
    for name, pat in NAMED_SIGNS.items():
        if pat == text:
            base = name
            break
    else:
        base = "cd:" + text
    if variant == "conj":
        return base
    if base == "C" and variant == "id":
        return "Cbar"
    if base == "Cs" and variant == "id":
        return "Csbar"
    if base == "H" and variant == "rev3":
        return "Htilde"
    if base == "Hs" and variant == "rev1":
        return "Hstilde"
    if base == "Hs" and variant == "rev2":
        return "Hshat"
    if base.startswith("cd:"):
        return base + ";star=" + variant
    return base + ";star=" + variant


def build_cd(signs, star_variant="conj"):
    """Build the doubling algebra for a sign sequence (each +1 or -1)."""
    signs = tuple(signs)
    if len(signs) > 4:
        raise ValueError("doubling depth > 4 is out of scope")
    if any(s not in (ELLIPTIC, HYPERBOLIC) for s in signs):
        raise ValueError("signs must be +1 (elliptic) or -1 (hyperbolic)")
    mul_sign = ((1,),)
    mul_index = ((0,),)
    star = (1,)
    for eta in signs:
        mul_sign, mul_index = _double(mul_sign, mul_index, eta, star)
        star = star + tuple(-1 for _ in star)
    alg = CompositionAlgebra(
        signs=signs,
        dim=2 ** len(signs),
        mul_sign=mul_sign,
        mul_index=mul_index,
        star_signs=star,
        star_variant="conj",
        name=_name_for(signs, "conj"),
    )
    if star_variant != "conj":
        alg = apply_star_variant(alg, star_variant)
    return alg


def validate_star(alg):
    """Check that the star is an involutive antiautomorphism fixing e_0."""
    star = alg.star_signs
    if star[0] != 1:
        raise NotAntiautomorphism("star must fix the unit")
    for i in range(alg.dim):
        for j in range(alg.dim):
            # (e_i e_j)* = e_j* e_i*
            lhs = alg.mul_sign[i][j] * star[alg.mul_index[i][j]]
            rhs = star[i] * star[j] * alg.mul_sign[j][i]
            if alg.mul_index[i][j] != alg.mul_index[j][i] or lhs != rhs:
                raise NotAntiautomorphism(
                    "star fails (xy)* = y* x* on basis pair (%d, %d) of %s"
                    % (i, j, alg.name)
                )


def apply_star_variant(alg, variant):
    """Replace the star map; the result is validated before it is returned.

    Variants: 'conj' (standard), 'id' (identity), 'rev<u>' (negate the single
    imaginary unit e_u, fixing the rest; quaternion dimension only).
    """
    if variant == "conj":
        star = tuple(1 if i == 0 else -1 for i in range(alg.dim))
    elif variant == "id":
        star = tuple(1 for _ in range(alg.dim))
    elif variant.startswith("rev"):
        if alg.dim != 4:
            raise UnsupportedVariant(
                "reversion is only defined in dimension 4 (got dim %d)" % alg.dim
            )
        u = int(variant[3:])
        if not 1 <= u < alg.dim:
            raise UnsupportedVariant("reversion unit index out of range: %d" % u)
        star = tuple(-1 if i == u else 1 for i in range(alg.dim))
    else:
        raise UnsupportedVariant("unknown star variant %r" % variant)
    out = replace(
        alg, star_signs=star, star_variant=variant, name=_name_for(alg.signs, variant)
    )
    validate_star(out)
    return out


# ---------------------------------------------------------------------------
# element arithmetic (elements are tuples of Fraction)

def zero(alg):
    return tuple(Fraction(0) for _ in range(alg.dim))


def basis_element(alg, i):
    return tuple(Fraction(1 if k == i else 0) for k in range(alg.dim))


def from_ints(alg, coeffs):
    return tuple(Fraction(c) for c in coeffs)


def multiply(alg, x, y):
    out = [Fraction(0)] * alg.dim
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        row_s = alg.mul_sign[i]
        row_k = alg.mul_index[i]
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            out[row_k[j]] += xi * yj * row_s[j]
    return tuple(out)


def conjugate(alg, x):
    return tuple(s * xi for s, xi in zip(alg.star_signs, x))


def re_part(x):
    return x[0]


def add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def scale(c, x):
    return tuple(c * a for a in x)


def inner_product(alg, x, y):
    """<x, y> = Re(x y*)."""
    return re_part(multiply(alg, x, conjugate(alg, y)))


def gram_diagonal(alg):
    """Diagonal of the Gram matrix on the basis (off-diagonal terms vanish)."""
    out = []
    for i in range(alg.dim):
        # <e_i, e_i> = star(i) * sign(e_i e_i)
        out.append(alg.star_signs[i] * alg.mul_sign[i][i])
    return out


def signature(alg):
    g = gram_diagonal(alg)
    return (sum(1 for x in g if x > 0), sum(1 for x in g if x < 0))


def commutator(alg, x, y):
    return sub(multiply(alg, x, y), multiply(alg, y, x))


def associator(alg, x, y, z):
    return sub(
        multiply(alg, multiply(alg, x, y), z),
        multiply(alg, x, multiply(alg, y, z)),
    )


def im_star_basis(alg):
    """Indices of basis elements negated by the star."""
    return [i for i, s in enumerate(alg.star_signs) if s == -1]


# ---------------------------------------------------------------------------
# linear maps (matrix rows; column c holds the image of e_c)

def map_apply(m, x):
    return tuple(
        sum((row[c] * x[c] for c in range(len(x)) if x[c] != 0), Fraction(0))
        for row in m
    )


def map_apply_basis(m, c):
    return tuple(row[c] for row in m)


def map_compose(a, b):
    n = len(a)
    return tuple(
        tuple(sum((a[r][k] * b[k][c] for k in range(n) if a[r][k] != 0), Fraction(0))
              for c in range(n))
        for r in range(n)
    )


def map_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def map_commutator(a, b):
    return map_sub(map_compose(a, b), map_compose(b, a))


def map_flatten(m):
    return [x for row in m for x in row]


def map_from_flat(v, d):
    return tuple(tuple(v[r * d + c] for c in range(d)) for r in range(d))


def map_is_zero(m):
    return all(x == 0 for row in m for x in row)


def commutator_map(alg, w):
    """z -> w z - z w as a matrix."""
    d = alg.dim
    rows = [[Fraction(0)] * d for _ in range(d)]
    for p, wp in enumerate(w):
        if wp == 0:
            continue
        for c in range(d):
            rows[alg.mul_index[p][c]][c] += wp * alg.mul_sign[p][c]
            rows[alg.mul_index[c][p]][c] -= wp * alg.mul_sign[c][p]
    return tuple(map(tuple, rows))


def associator_map(alg, x, y):
    """z -> [x, y, z] as a matrix."""
    d = alg.dim
    xy = multiply(alg, x, y)
    cols = []
    for c in range(d):
        e = basis_element(alg, c)
        cols.append(sub(multiply(alg, xy, e), multiply(alg, x, multiply(alg, y, e))))
    return tuple(tuple(cols[c][r] for c in range(d)) for r in range(d))


def derivation_map(alg, x, y):
    """D_{x,y} = C_[x,y] - 3 A_{x,y}; a derivation for alternative algebras."""
    c = commutator_map(alg, commutator(alg, x, y))
    a = associator_map(alg, x, y)
    return tuple(
        tuple(cr - 3 * ar for cr, ar in zip(rc, ra)) for rc, ra in zip(c, a)
    )


def leibniz_defect(alg, m, i, j):
    """D(e_i e_j) - D(e_i) e_j - e_i D(e_j) for a candidate derivation D."""
    ei = basis_element(alg, i)
    ej = basis_element(alg, j)
    lhs = map_apply(m, multiply(alg, ei, ej))
    rhs = add(
        multiply(alg, map_apply(m, ei), ej),
        multiply(alg, ei, map_apply(m, ej)),
    )
    return sub(lhs, rhs)


def is_derivation(alg, m):
    for i in range(alg.dim):
        for j in range(alg.dim):
            if any(x != 0 for x in leibniz_defect(alg, m, i, j)):
                return False
    return True


def map_commutes_with_star(alg, m):
    for r in range(alg.dim):
        for c in range(alg.dim):
            if m[r][c] != 0 and alg.star_signs[r] != alg.star_signs[c]:
                return False
    return True


class DerivationSpan:
    """Row-reduced span of the maps D_{e_i, e_j}, optionally star-filtered."""

    def __init__(self, alg, star_compatible=False):
        self.alg = alg
        self.star_compatible = star_compatible
        d = alg.dim
        flats = []
        for i in range(1, d):
            for j in range(i + 1, d):
                m = derivation_map(alg, basis_element(alg, i), basis_element(alg, j))
                v = map_flatten(m)
                if any(x != 0 for x in v):
                    flats.append(v)
        rows, pivots = rref(flats) if flats else ([], [])
        if star_compatible and rows:
            # keep the combinations vanishing where star signs differ
            bad = [
                r * d + c
                for r in range(d)
                for c in range(d)
                if alg.star_signs[r] != alg.star_signs[c]
            ]
            constraint = [[row[p] for row in rows] for p in bad]
            combos = nullspace(constraint, len(rows))
            filtered = []
            for combo in combos:
                v = [Fraction(0)] * (d * d)
                for c, row in zip(combo, rows):
                    if c != 0:
                        for k, x in enumerate(row):
                            if x != 0:
                                v[k] += c * x
                filtered.append(v)
            rows, pivots = rref(filtered) if filtered else ([], [])
        self.rows = rows
        self.pivots = pivots
        self.maps = [map_from_flat(row, d) for row in rows]

    def __len__(self):
        return len(self.rows)

    def decompose(self, m):
        """Coefficients of a map in this span, or None if outside it."""
        return decompose_in_rref(map_flatten(m), self.rows, self.pivots)


def derivation_basis(alg, star_compatible=False):
    """Basis of span{D_{e_i,e_j}} as matrices (star-filtered on request)."""
    return DerivationSpan(alg, star_compatible).maps


# ---------------------------------------------------------------------------
# structure checks; each returns None or a counterexample

def check_associative(alg):
    for i, j, k in product(range(alg.dim), repeat=3):
        a = associator(
            alg, basis_element(alg, i), basis_element(alg, j), basis_element(alg, k)
        )
        if any(x != 0 for x in a):
            return (i, j, k)
    return None


def check_commutative(alg):
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            if (
                alg.mul_sign[i][j] != alg.mul_sign[j][i]
                or alg.mul_index[i][j] != alg.mul_index[j][i]
            ):
                return (i, j)
    return None


def _basis_associator(alg, i, j, k):
    return associator(
        alg, basis_element(alg, i), basis_element(alg, j), basis_element(alg, k)
    )


def check_alternative(alg):
    """Vanishing of the symmetrized associator on basis triples."""
    for i, j, k in product(range(alg.dim), repeat=3):
        left = add(_basis_associator(alg, i, j, k), _basis_associator(alg, j, i, k))
        if any(x != 0 for x in left):
            return (i, j, k)
        right = add(_basis_associator(alg, i, j, k), _basis_associator(alg, i, k, j))
        if any(x != 0 for x in right):
            return (i, j, k)
    return None


def _two_term_family(alg):
    """All +/- e_i and +/- e_i +/- e_j with i < j, as sparse coefficient lists."""
    fam = []
    for i in range(alg.dim):
        for s in (1, -1):
            fam.append(((i, Fraction(s)),))
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            for si in (1, -1):
                for sj in (1, -1):
                    fam.append(((i, Fraction(si)), (j, Fraction(sj))))
    return fam


def check_composition(alg):
    """<xy, xy> = <x,x><y,y> over sums of at most two signed basis elements."""
    gram = gram_diagonal(alg)
    fam = _two_term_family(alg)
    norms = []
    for x in fam:
        norms.append(sum(gram[i] * c * c for i, c in x))
    sign_row = alg.mul_sign
    idx_row = alg.mul_index
    for a, x in enumerate(fam):
        nx = norms[a]
        for b, y in enumerate(fam):
            acc = {}
            for i, ci in x:
                si = sign_row[i]
                ki = idx_row[i]
                for j, cj in y:
                    k = ki[j]
                    acc[k] = acc.get(k, Fraction(0)) + ci * cj * si[j]
            nxy = sum(gram[k] * v * v for k, v in acc.items())
            if nxy != nx * norms[b]:
                return (_sparse_to_tuple(alg, x), _sparse_to_tuple(alg, y))
    return None


def _sparse_to_tuple(alg, sparse):
    v = [Fraction(0)] * alg.dim
    for i, c in sparse:
        v[i] += c
    return tuple(v)


def check_artin(alg):
    """(xx)y = x(xy), (xy)x = x(yx), (yx)x = y(xx) on all basis pairs."""
    for i in range(alg.dim):
        x = basis_element(alg, i)
        xx = multiply(alg, x, x)
        for j in range(alg.dim):
            y = basis_element(alg, j)
            if multiply(alg, xx, y) != multiply(alg, x, multiply(alg, x, y)):
                return ("left", i, j)
            if multiply(alg, multiply(alg, x, y), x) != multiply(
                alg, x, multiply(alg, y, x)
            ):
                return ("flexible", i, j)
            if multiply(alg, multiply(alg, y, x), x) != multiply(alg, y, xx):
                return ("right", i, j)
    return None


def check_moufang(alg):
    """The three Moufang identities on all basis triples."""
    for i, j, k in product(range(alg.dim), repeat=3):
        x = basis_element(alg, i)
        y = basis_element(alg, j)
        z = basis_element(alg, k)
        if multiply(alg, multiply(alg, x, multiply(alg, y, x)), z) != multiply(
            alg, x, multiply(alg, y, multiply(alg, x, z))
        ):
            return ("m1", i, j, k)
        if multiply(alg, multiply(alg, x, multiply(alg, y, z)), x) != multiply(
            alg, multiply(alg, x, y), multiply(alg, z, x)
        ):
            return ("m2", i, j, k)
        if multiply(alg, y, multiply(alg, multiply(alg, x, z), x)) != multiply(
            alg, multiply(alg, multiply(alg, y, x), z), x
        ):
            return ("m3", i, j, k)
    return None
