"""Text descriptors for algebras.

Named forms:
    R, C, Cs, H, Hs, O, Os      doubling algebras with standard conjugation
    Cbar, Csbar                 complex forms with the identity star
    Htilde                      quaternions, reversion negating e_3
    Hstilde                     split quaternions, reversion negating the
                                elliptic unit e_1
    Hshat                       split quaternions, reversion negating the
                                hyperbolic unit e_2
Raw form:
    cd:SIGNS[;star=V]           SIGNS over {+,-} ('+' elliptic), V one of
                                conj, id, rev<u>
Tensor products:
    K1*K2
"""

from __future__ import annotations

from functools import lru_cache

from . import cd, tensor

NAMED = {
    "R": ("", "conj"),
    "C": ("+", "conj"),
    "Cs": ("-", "conj"),
    "Cbar": ("+", "id"),
    "Csbar": ("-", "id"),
    "H": ("++", "conj"),
    "Hs": ("+-", "conj"),
    "Htilde": ("++", "rev3"),
    "Hstilde": ("+-", "rev1"),
    "Hshat": ("+-", "rev2"),
    "O": ("+++", "conj"),
    "Os": ("++-", "conj"),
}


@lru_cache(maxsize=None)
def parse_factor(text):
    """One doubling algebra from its descriptor."""
    text = text.strip()
    if text in NAMED:
        signs, variant = NAMED[text]
        return cd.build_cd(cd.parse_signs(signs), star_variant=variant)
    if text.startswith("cd:"):
        body = text[3:]
        variant = "conj"
        if ";" in body:
            body, opt = body.split(";", 1)
            opt = opt.strip()
            if not opt.startswith("star="):
                raise ValueError("unknown descriptor option %r" % opt)
            variant = opt[5:]
        return cd.build_cd(cd.parse_signs(body.strip()), star_variant=variant)
    raise ValueError("unknown algebra descriptor %r" % text)


@lru_cache(maxsize=None)
def parse_algebra(text):
    """An algebra or tensor product from its descriptor."""
    text = text.strip()
    if "*" in text:
        parts = text.split("*")
        if len(parts) != 2:
            raise ValueError("tensor descriptors take exactly two factors: %r" % text)
        return tensor.tensor_product(parse_factor(parts[0]), parse_factor(parts[1]))
    return parse_factor(text)
