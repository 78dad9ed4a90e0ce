"""Exceptions and sentinel values shared by the package."""

from enum import Enum


class Sentinel(Enum):
    NOT_ZERO_DIM = "NOT_ZERO_DIM"
    INFINITE = "INFINITE"
    NOT_APPLICABLE = "NOT_APPLICABLE"
    INCONSISTENT = "INCONSISTENT"

    def __repr__(self):
        return self.value

    def __str__(self):
        return self.value


NOT_ZERO_DIM = Sentinel.NOT_ZERO_DIM
INFINITE = Sentinel.INFINITE
NOT_APPLICABLE = Sentinel.NOT_APPLICABLE
INCONSISTENT = Sentinel.INCONSISTENT


class Char2Error(Exception):
    """Base class for all errors raised here."""


class FieldError(Char2Error, ValueError):
    pass


class PolyError(Char2Error, ValueError):
    pass


class CertificationError(Char2Error):
    """A computation could not certify its answer within the given bounds."""


class NonNormalError(Char2Error):
    """The singular locus of a surface is positive dimensional."""


class NotSingularError(Char2Error, ValueError):
    pass


class HypothesisError(Char2Error):
    """Input violates a side condition required by a construction."""


class QuasiEllipticError(Char2Error):
    pass


class LatticeError(Char2Error, ValueError):
    pass
