"""Doubling algebras checked against an independent recursive oracle.

The oracle multiplies nested pairs directly from the doubling rule
(a, b)(c, d) = (ac - eta d*b, da + bc*) without ever building a table, so a
table bug and an oracle bug would have to agree to slip through.
"""

from fractions import Fraction
from itertools import product

import pytest

from cdlie import cd
from cdlie.cd import (
    DerivationSpan,
    apply_star_variant,
    basis_element,
    build_cd,
    check_alternative,
    check_artin,
    check_associative,
    check_commutative,
    check_composition,
    check_moufang,
    commutator_map,
    conjugate,
    derivation_map,
    gram_diagonal,
    im_star_basis,
    inner_product,
    is_derivation,
    multiply,
    parse_signs,
    signature,
    signs_text,
    validate_star,
)
from cdlie.errors import NotAntiautomorphism, UnsupportedVariant

ALL_NAMED = ("R", "C", "Cs", "H", "Hs", "O", "Os")

# every sign pattern up to depth 3
ALL_PATTERNS = [""] + [
    "".join(p) for k in (1, 2, 3) for p in product("+-", repeat=k)
]


# --- oracle: nested-pair arithmetic ----------------------------------------

def o_zero(k):
    if k == 0:
        return Fraction(0)
    return (o_zero(k - 1), o_zero(k - 1))


def o_basis(i, k):
    if k == 0:
        assert i == 0
        return Fraction(1)
    half = 1 << (k - 1)
    if i < half:
        return (o_basis(i, k - 1), o_zero(k - 1))
    return (o_zero(k - 1), o_basis(i - half, k - 1))


def o_add(x, y):
    if isinstance(x, tuple):
        return (o_add(x[0], y[0]), o_add(x[1], y[1]))
    return x + y


def o_neg(x):
    if isinstance(x, tuple):
        return (o_neg(x[0]), o_neg(x[1]))
    return -x


def o_conj(x):
    if isinstance(x, tuple):
        return (o_conj(x[0]), o_neg(x[1]))
    return x


def o_mul(x, y, signs):
    """signs[-1] is the outermost doubling stage ('+' elliptic)."""
    if not signs:
        return x * y
    inner = signs[:-1]
    eta = 1 if signs[-1] == "+" else -1
    a, b = x
    c, d = y
    t = o_mul(o_conj(d), b, inner)
    if eta == 1:
        t = o_neg(t)
    left = o_add(o_mul(a, c, inner), t)
    right = o_add(o_mul(d, a, inner), o_mul(b, o_conj(c), inner))
    return (left, right)


def o_flatten(x, k):
    if k == 0:
        return [x]
    return o_flatten(x[0], k - 1) + o_flatten(x[1], k - 1)


@pytest.mark.parametrize("pattern", ALL_PATTERNS + ["++++"])
def test_table_matches_pair_oracle(pattern):
    alg = build_cd(parse_signs(pattern))
    k = len(pattern)
    for i in range(alg.dim):
        for j in range(alg.dim):
            got = o_flatten(o_mul(o_basis(i, k), o_basis(j, k), pattern), k)
            want = [Fraction(0)] * alg.dim
            want[alg.mul_index[i][j]] = Fraction(alg.mul_sign[i][j])
            assert got == want, (pattern, i, j)


@pytest.mark.parametrize("pattern", ALL_PATTERNS)
def test_star_matches_pair_oracle(pattern):
    alg = build_cd(parse_signs(pattern))
    k = len(pattern)
    for i in range(alg.dim):
        got = o_flatten(o_conj(o_basis(i, k)), k)
        want = [Fraction(0)] * alg.dim
        want[i] = Fraction(alg.star_signs[i])
        assert got == want


def test_quaternion_table_literal():
    # i j = k cyclic, all imaginary units square to -1
    h = build_cd(parse_signs("++"))
    expected = {
        (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
        (1, 2): (1, 3), (2, 1): (-1, 3),
        (2, 3): (1, 1), (3, 2): (-1, 1),
        (3, 1): (1, 2), (1, 3): (-1, 2),
    }
    for (i, j), (s, k) in expected.items():
        assert (h.mul_sign[i][j], h.mul_index[i][j]) == (s, k)
    for i in range(4):
        assert (h.mul_sign[0][i], h.mul_index[0][i]) == (1, i)
        assert (h.mul_sign[i][0], h.mul_index[i][0]) == (1, i)


def test_split_complex_idempotents():
    cs = build_cd(parse_signs("-"))
    assert (cs.mul_sign[1][1], cs.mul_index[1][1]) == (1, 0)
    # (1 + e1)/2 squares to itself, so the algebra has zero divisors
    x = (Fraction(1, 2), Fraction(1, 2))
    assert multiply(cs, x, x) == x
    # 1 + e1 is a null vector for the norm form
    n = (Fraction(1), Fraction(1))
    assert inner_product(cs, n, n) == 0


def test_signs_roundtrip_and_validation():
    assert signs_text(parse_signs("+-+")) == "+-+"
    with pytest.raises(ValueError):
        parse_signs("+x")
    with pytest.raises(ValueError):
        build_cd(parse_signs("+++++"))
    with pytest.raises(ValueError):
        build_cd((1, 2))


def test_named_signatures_and_gram():
    expected = {
        "R": (1, 0), "C": (2, 0), "Cs": (1, 1), "H": (4, 0),
        "Hs": (2, 2), "O": (8, 0), "Os": (4, 4),
    }
    for name, sig in expected.items():
        alg = build_cd(parse_signs(cd.NAMED_SIGNS[name]))
        assert signature(alg) == sig
        gram = gram_diagonal(alg)
        assert gram[0] == 1
        assert (sum(1 for g in gram if g > 0), sum(1 for g in gram if g < 0)) == sig


def test_named_derivation_and_imaginary_dimensions():
    der = {"R": 0, "C": 0, "Cs": 0, "H": 3, "Hs": 3, "O": 14, "Os": 14}
    for name in ALL_NAMED:
        alg = build_cd(parse_signs(cd.NAMED_SIGNS[name]))
        assert len(DerivationSpan(alg)) == der[name], name
        assert len(im_star_basis(alg)) == alg.dim - 1


def test_inner_product_is_symmetric_re_form():
    o = build_cd(parse_signs("++-"))
    x = tuple(Fraction(v) for v in (1, -2, 0, 3, 0, 1, 0, -1))
    y = tuple(Fraction(v) for v in (2, 1, 1, 0, -1, 0, 2, 5))
    # <x,y> = Re(x conj(y))
    direct = multiply(o, x, conjugate(o, y))[0]
    assert inner_product(o, x, y) == direct
    assert inner_product(o, y, x) == direct


# --- star variants ---------------------------------------------------------

def test_star_variant_names_and_signs():
    cases = {
        ("+", "id"): ("Cbar", (1, 1)),
        ("-", "id"): ("Csbar", (1, 1)),
        ("++", "rev3"): ("Htilde", (1, 1, 1, -1)),
        ("+-", "rev1"): ("Hstilde", (1, -1, 1, 1)),
        ("+-", "rev2"): ("Hshat", (1, 1, -1, 1)),
    }
    for (pattern, variant), (name, star) in cases.items():
        alg = build_cd(parse_signs(pattern), star_variant=variant)
        assert alg.name == name
        assert alg.star_signs == star
        validate_star(alg)


def test_identity_star_needs_commutativity():
    # (xy)* = y*x* with trivial star forces commutativity
    with pytest.raises(NotAntiautomorphism):
        build_cd(parse_signs("++"), star_variant="id")


def test_reversion_requires_quaternion_dimension():
    with pytest.raises(UnsupportedVariant):
        build_cd(parse_signs("+"), star_variant="rev1")
    with pytest.raises(UnsupportedVariant):
        build_cd(parse_signs("+++"), star_variant="rev3")
    with pytest.raises(UnsupportedVariant):
        build_cd(parse_signs("++"), star_variant="rev0")
    with pytest.raises(UnsupportedVariant):
        build_cd(parse_signs("++"), star_variant="bogus")


def test_identity_star_drops_odd_part():
    cbar = build_cd(parse_signs("+"), star_variant="id")
    assert im_star_basis(cbar) == []
    htilde = build_cd(parse_signs("++"), star_variant="rev3")
    assert len(im_star_basis(htilde)) == 1
    # only the commutator with the negated unit survives the star filter
    assert len(DerivationSpan(htilde, star_compatible=True)) == 1


# --- structure checks ------------------------------------------------------

@pytest.mark.parametrize("pattern", ALL_PATTERNS)
def test_depth_three_is_alternative_and_composition(pattern):
    alg = build_cd(parse_signs(pattern))
    assert check_alternative(alg) is None
    assert check_artin(alg) is None
    assert check_moufang(alg) is None
    assert check_composition(alg) is None


def test_associativity_boundary():
    assert check_associative(build_cd(parse_signs("++"))) is None
    assert check_associative(build_cd(parse_signs("+-"))) is None
    witness = check_associative(build_cd(parse_signs("+++")))
    assert witness is not None
    o = build_cd(parse_signs("+++"))
    i, j, k = witness
    a = cd.associator(
        o, basis_element(o, i), basis_element(o, j), basis_element(o, k)
    )
    assert any(x != 0 for x in a)


def test_commutativity_boundary():
    assert check_commutative(build_cd(parse_signs("+"))) is None
    assert check_commutative(build_cd(parse_signs("-"))) is None
    assert check_commutative(build_cd(parse_signs("++"))) is not None


def test_sedenions_fail_composition():
    sed = build_cd(parse_signs("++++"))
    witness = check_composition(sed)
    assert witness is not None
    x, y = witness
    xy = multiply(sed, x, y)
    assert inner_product(sed, xy, xy) != inner_product(sed, x, x) * inner_product(
        sed, y, y
    )
    # they are not alternative either
    assert check_alternative(sed) is not None


# --- derivations -----------------------------------------------------------

def test_inner_derivation_of_octonions():
    o = build_cd(parse_signs("+++"))
    d = derivation_map(o, basis_element(o, 1), basis_element(o, 2))
    assert is_derivation(o, d)
    # plain commutators stop being derivations once associativity fails
    assert not is_derivation(o, commutator_map(o, basis_element(o, 1)))
    h = build_cd(parse_signs("++"))
    assert is_derivation(h, commutator_map(h, basis_element(h, 1)))


def test_derivation_span_decompose():
    o = build_cd(parse_signs("+++"))
    span = DerivationSpan(o)
    d = derivation_map(o, basis_element(o, 2), basis_element(o, 5))
    coeffs = span.decompose(d)
    assert coeffs is not None
    # reconstruct and compare
    rebuilt = [Fraction(0)] * (o.dim * o.dim)
    for c, row in zip(coeffs, span.rows):
        for idx, v in enumerate(row):
            rebuilt[idx] += c * v
    assert rebuilt == list(cd.map_flatten(d))
    # a transposition is not in the derivation span
    swap = tuple(
        tuple(Fraction(1 if (r, c) in ((1, 2), (2, 1)) else 0) for c in range(8))
        for r in range(8)
    )
    assert span.decompose(swap) is None
