"""Touchpoints for the Cartier operator on genus-3 hyperelliptic curves."""
from .cartier import CartierData, cartier_manin
from .curve import Curve, make_curve
from .field import FieldElement, build_field
from .poly import Poly
from .touchpoint import Classification, Outcome, classify, find_touchpoint
from .zeta import Verdict, is_supersingular, point_count, zeta_data

__all__ = [
    "CartierData", "Classification", "Curve", "FieldElement", "Outcome", "Poly", "Verdict",
    "build_field", "cartier_manin", "classify", "find_touchpoint", "is_supersingular",
    "make_curve", "point_count", "zeta_data",
]
