"""
Curves on cubic scrolls, and splitting strata
=============================================

Degree-10 classes on F_1 and F_3 with their adjunction genera, then the
splitting types of a rank-4 bundle of degree 10 on P^1.
"""

from gincalc.surfaces import (
    F1,
    F3,
    ci_genus,
    degree10_classes,
    enumerate_splittings,
    riemann_roch_chi,
    solve_scroll_quadratic,
    special_below,
)

for S in (F1, F3):
    print(f"F_{S.n}")
    for D, g in degree10_classes(S, (0, 7)):
        print(f"  {D}: genus {g}, chi {riemann_roch_chi(D, S)}")

print("scroll roots for genus 9:", solve_scroll_quadratic(9))
print("scroll roots for genus 8:", solve_scroll_quadratic(8))

found = enumerate_splittings(10, 4)
print(len(found), "splitting types; the first few:")
for t, c in found[:6]:
    print(" ", t, "codim", c)
print("special types of codimension below 4:", special_below(found))

print("complete intersection (2,2,3):", ci_genus((2, 2, 3), 4))
