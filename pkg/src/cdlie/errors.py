"""Exceptions shared across the package."""


class CdlieError(Exception):
    """Base class for all package errors."""


class NotAntiautomorphism(CdlieError):
    """A proposed star map fails (xy)* = y*x* on some basis pair."""


class UnsupportedVariant(CdlieError):
    """A star variant that is not defined for the given algebra."""


class ZeroLabel(CdlieError):
    """A Cayley-Klein label list contains a zero entry."""


class OctonionicRequiresN3(CdlieError):
    """Octonionic special-unitary constructions only close for n in {1, 3}."""


class ClosureFailure(CdlieError):
    """A bracket result does not decompose in the construction basis."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotSemisimple(CdlieError):
    """Killing form is degenerate where a semisimple algebra was required."""


class NotSymmetric(CdlieError):
    """A matrix handed to the inertia routine is not symmetric."""


class UnknownAlgebra(CdlieError):
    """No atlas entry matches the reported invariants."""


class UnsupportedFactor(CdlieError):
    """A factor algebra outside the supported set for this operation."""
