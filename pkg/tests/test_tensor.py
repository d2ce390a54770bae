"""Tensor products of doubling algebras."""

from fractions import Fraction

import pytest

from cdlie import cd, tensor
from cdlie.errors import UnsupportedFactor
from cdlie.tensor import (
    check_tensor_derivation_formula,
    embed_side,
    tensor_derivation_basis,
    tensor_product,
)


def named(text, variant="conj"):
    return cd.build_cd(cd.parse_signs(cd.NAMED_SIGNS[text]), star_variant=variant)


def test_flat_unflat_roundtrip():
    t = tensor_product(named("H"), named("C"))
    assert t.dim == 8
    for i in range(4):
        for j in range(2):
            assert t.unflat(t.flat(i, j)) == (i, j)


def test_componentwise_product():
    a, b = named("C"), named("Cs")
    t = tensor_product(a, b)
    for i1 in range(2):
        for i2 in range(2):
            for j1 in range(2):
                for j2 in range(2):
                    fi, fj = t.flat(i1, i2), t.flat(j1, j2)
                    assert t.mul_sign[fi][fj] == a.mul_sign[i1][j1] * b.mul_sign[i2][j2]
                    assert t.mul_index[fi][fj] == t.flat(
                        a.mul_index[i1][j1], b.mul_index[i2][j2]
                    )
                    assert t.star_signs[fi] == a.star_signs[i1] * b.star_signs[i2]


def test_tensor_name_and_unit():
    t = tensor_product(named("Hs"), named("O"))
    assert t.name == "Hs*O"
    assert t.star_signs[0] == 1
    assert t.mul_sign[0][5] == 1 and t.mul_index[0][5] == 5


def test_star_is_antiautomorphism_on_tensor():
    # validate_star only reads table fields, so it works on tensors too
    for pair in (("C", "H"), ("Cs", "Os"), ("H", "H")):
        cd.validate_star(tensor_product(named(pair[0]), named(pair[1])))


def test_nested_tensor_rejected():
    t = tensor_product(named("R"), named("C"))
    with pytest.raises(UnsupportedFactor):
        tensor_product(t, named("R"))
    with pytest.raises(UnsupportedFactor):
        tensor_product(named("R"), "C")


def test_derivation_basis_counts():
    assert len(tensor_derivation_basis(tensor_product(named("C"), named("O")))) == 14
    assert len(tensor_derivation_basis(tensor_product(named("H"), named("H")))) == 6
    assert len(tensor_derivation_basis(tensor_product(named("O"), named("Os")))) == 28
    assert len(tensor_derivation_basis(tensor_product(named("R"), named("Cs")))) == 0


def test_derivation_basis_star_filter():
    htilde = cd.build_cd(cd.parse_signs("++"), star_variant="rev3")
    t = tensor_product(htilde, named("H"))
    assert len(tensor_derivation_basis(t)) == 6
    # only one left-side map commutes with the reversion star
    filtered = tensor_derivation_basis(t, star_compatible=True)
    assert len(filtered) == 4
    assert sum(1 for d in filtered if d.side == tensor.LEFT) == 1


def test_embed_side_acts_on_one_factor():
    t = tensor_product(named("H"), named("C"))
    span = cd.derivation_basis(t.left)
    m = embed_side(t, tensor.LEFT, span[0])
    d2 = t.right.dim
    for r in range(t.dim):
        for c in range(t.dim):
            r1, r2 = divmod(r, d2)
            c1, c2 = divmod(c, d2)
            if r2 == c2:
                assert m[r][c] == span[0][r1][c1]
            else:
                assert m[r][c] == 0


def test_embedded_derivations_satisfy_leibniz():
    t = tensor_product(named("H"), named("Hs"))
    for d in tensor_derivation_basis(t):
        m = embed_side(t, d.side, d.map)
        for i in range(t.dim):
            for j in range(t.dim):
                defect = cd.leibniz_defect(t, m, i, j)
                assert all(x == 0 for x in defect)


def test_split_formula_small_exhaustive():
    assert check_tensor_derivation_formula(tensor_product(named("C"), named("H"))) is None
    assert check_tensor_derivation_formula(tensor_product(named("Cs"), named("Hs"))) is None


def test_split_formula_octonion_sampled():
    t = tensor_product(named("H"), named("O"))
    assert check_tensor_derivation_formula(t, sample=25, seed=3) is None


def test_inner_product_diagonal_matches_factors():
    a, b = named("Cs"), named("Hs")
    t = tensor_product(a, b)
    ga, gb = cd.gram_diagonal(a), cd.gram_diagonal(b)
    gt = cd.gram_diagonal(t)
    for i in range(a.dim):
        for j in range(b.dim):
            assert gt[t.flat(i, j)] == ga[i] * gb[j]


def test_zero_divisors_in_split_tensor():
    # (1 (x) 1 + 1 (x) e1)/2 is idempotent when the right factor is split
    t = tensor_product(named("R"), named("Cs"))
    x = (Fraction(1, 2), Fraction(1, 2))
    assert cd.multiply(t, x, x) == x
