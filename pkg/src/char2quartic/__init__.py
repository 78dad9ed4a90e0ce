"""Singular quartic surfaces and elliptic fibrations in characteristic 2."""

from .algebra.field import FieldElem, FieldTower, field_make, gf
from .algebra.poly import MultiPoly
from .errors import (INCONSISTENT, INFINITE, NOT_APPLICABLE, NOT_ZERO_DIM, CertificationError, Char2Error,
                     HypothesisError, LatticeError, NonNormalError, QuasiEllipticError)
from .families import klein_form, general_quartic, strange_points
from .fibrations import WeierstrassModel, discriminant, euler_ledger, tate_fiber
from .gauss_dual import degree_ledger, dual_plane_kernel
from .singularities import QuarticSurface, find_singular_points, surface

__version__ = "0.1.0"

__all__ = [
    "FieldElem", "FieldTower", "field_make", "gf", "MultiPoly",
    "INCONSISTENT", "INFINITE", "NOT_APPLICABLE", "NOT_ZERO_DIM", "CertificationError", "Char2Error",
    "HypothesisError", "LatticeError", "NonNormalError", "QuasiEllipticError",
    "klein_form", "general_quartic", "strange_points",
    "WeierstrassModel", "discriminant", "euler_ledger", "tate_fiber",
    "degree_ledger", "dual_plane_kernel", "QuarticSurface", "find_singular_points", "surface",
]
