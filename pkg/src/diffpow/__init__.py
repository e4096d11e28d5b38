"""Differential powers, decompositions and differential closures of monomial ideals."""
from .core import (DimensionError, ExponentOverflowError, MonomialIdeal,
                   PreconditionError, PurePowerIdeal, contains_ideal,
                   contains_monomial, intersect, is_principal, minimalize,
                   ordinary_power, radical)
from .decompose import Decomposition, decompose, is_irredundant
from .diffpower import diffpower, diffpower_principal, diffpower_pure
from .kernels import BACKEND
from .textio import parse_ideal

__all__ = [
    "BACKEND", "Decomposition", "DimensionError", "ExponentOverflowError",
    "MonomialIdeal", "PreconditionError", "PurePowerIdeal", "contains_ideal",
    "contains_monomial", "decompose", "diffpower", "diffpower_principal",
    "diffpower_pure", "intersect", "is_irredundant", "is_principal",
    "minimalize", "ordinary_power", "parse_ideal", "radical",
]
