"""
Generic initial ideals by random coordinates
============================================

The rational normal quartic, a random rational curve of degree 10, and a
union of two plane quintics meeting in a point.
"""

import numpy as np

from gincalc.groebner import curves
from gincalc.groebner.gin import gin_estimate, restriction_saturation_check
from gincalc.groebner.poly import parse_polynomial
from gincalc.monomials import hilbert_polynomial_curve, sheaf_h1_oracle

quartic = curves.curve_ideal_from_param(curves.rational_normal_curve(4), 2)
est = gin_estimate(quartic, trials=5, seed=0, cap=4)
print("quartic:", est.ideal, "stable:", est.stable)
print("hyperplane section routes agree:", restriction_saturation_check(quartic, seed=0, cap=4).equal)

rng = np.random.default_rng(0)
forms = curves.random_param(10, rng)
J, stable = curves.curve_gin(forms, cap=7, seed=0)
print("degree 10:", J)
print("  (d, g) =", hilbert_polynomial_curve(J), " h^1(I(5)) =", sheaf_h1_oracle(J, 5).value)

f = parse_polynomial("x0^5 + x1^5 + x0*x2^4", 5)
g = parse_polynomial("x3^5 + x4^5 + x2^4*x3", 5)
print("lead terms of the union generate its initial ideal:", curves.verify_leadterm_claim(f, g))
print("gin of the union:", curves.union_gin(f, g).ideal)
