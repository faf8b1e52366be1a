"""Exact polynomial computations over F_p (rationals for spot checks)."""

from gincalc.groebner.buchberger import GroebnerBasis, buchberger, initial_ideal, is_groebner, normal_form
from gincalc.groebner.curves import (
    curve_gin,
    curve_ideal_from_param,
    curve_initial_ideal,
    random_admissible_quintic,
    random_param,
    union_gin,
    union_quintics_ideal,
    verify_leadterm_claim,
)
from gincalc.groebner.field import GF, QQ, PrimeField, RationalField
from gincalc.groebner.gin import GinEstimate, LinearChange, gin_estimate, restriction_saturation_check
from gincalc.groebner.poly import Polynomial, parse_polynomial, read_polynomials

__all__ = [
    "GF", "QQ", "GinEstimate", "GroebnerBasis", "LinearChange", "Polynomial", "PrimeField", "RationalField",
    "buchberger", "curve_gin", "curve_ideal_from_param", "curve_initial_ideal", "gin_estimate",
    "initial_ideal", "is_groebner", "normal_form", "parse_polynomial", "random_admissible_quintic",
    "random_param", "read_polynomials", "restriction_saturation_check", "union_gin",
    "union_quintics_ideal", "verify_leadterm_claim",
]
