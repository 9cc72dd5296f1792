"""Supersingularity of hyperelliptic jacobians in small odd characteristic,
with the discriminant, permutation-module and character-table checks that
go with it."""

from .algebra import GF, FieldElement, FieldSpec, Poly, parse_field
from .cartier import Classification, CurveModel, classify_ss_g2, cm_matrix
from .zeta import LPolynomial, count_points, l_polynomial, newton_slopes

__version__ = "0.1.0"

__all__ = [
    "GF", "FieldElement", "FieldSpec", "Poly", "parse_field",
    "Classification", "CurveModel", "classify_ss_g2", "cm_matrix",
    "LPolynomial", "count_points", "l_polynomial", "newton_slopes",
]
