"""Exact constructions of composition algebras and their unitary Lie algebras.

The package builds the eight-and-under dimensional real composition algebras
by iterated doubling, tensors pairs of them, and assembles the antihermitian
matrix algebras over those products whose brackets close exactly on rational
structure constants.  Everything downstream (Killing forms, signatures, the
square of real forms, the realization tables) is integer or Fraction
arithmetic; nothing is floated.
"""

from .cd import CompositionAlgebra, build_cd, parse_signs, signature
from .descriptors import NAMED, parse_algebra, parse_factor
from .errors import (
    CdlieError,
    ClosureFailure,
    NotSemisimple,
    OctonionicRequiresN3,
    UnknownAlgebra,
    UnsupportedFactor,
    UnsupportedVariant,
    ZeroLabel,
)
from .liealg import LieAlgebra, check_jacobi, killing_report, load, save
from .tensor import TensorAlgebra, tensor_product
from .vinberg import (
    ConstructionRecipe,
    build_lie_algebra,
    build_metric,
    parse_recipe,
    predict_u2,
    recipe_text,
)
from .atlas import generate_square, identify, named_form, verify_reverse_tables

__version__ = "0.1.0"

__all__ = [
    "CdlieError",
    "ClosureFailure",
    "CompositionAlgebra",
    "ConstructionRecipe",
    "LieAlgebra",
    "NotSemisimple",
    "OctonionicRequiresN3",
    "TensorAlgebra",
    "UnknownAlgebra",
    "UnsupportedFactor",
    "UnsupportedVariant",
    "ZeroLabel",
    "NAMED",
    "build_cd",
    "build_lie_algebra",
    "build_metric",
    "check_jacobi",
    "generate_square",
    "identify",
    "killing_report",
    "load",
    "named_form",
    "parse_algebra",
    "parse_factor",
    "parse_recipe",
    "parse_signs",
    "predict_u2",
    "recipe_text",
    "save",
    "signature",
    "tensor_product",
    "verify_reverse_tables",
    "__version__",
]
