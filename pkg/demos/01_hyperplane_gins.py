"""
Hyperplane gins of ten points
=============================

Ten general points of a degree-10 curve in P^4 have one of a handful of
Borel-fixed initial ideals.  We list them two ways and check they agree.
"""

from gincalc.cohomology import genus_of_cone
from gincalc.enumeration import hyperplane_gins
from gincalc.trees import Ruleset, lambda_reachable_set, nonleaf_count, to_dot, tree_from_ideal

# staircases of size 10, no linear forms, generated in degree <= 4
gins = hyperplane_gins("p3", 10, 4)
for I in gins:
    print(I, " cone genus", genus_of_cone(I))

# the same ideals appear among the Lambda-rule trees with ten non-leaf vertices
reach = lambda_reachable_set(10, Ruleset.NONDEGENERATE)
print(len(reach), "ideals reachable in ten steps;", "all five inside:", set(gins) <= reach)

T = tree_from_ideal(gins[0])
print("non-leaf vertices:", nonleaf_count(T))
print(to_dot(T, "first"))

# points spanning only a plane: the gap condition leaves two
for I in hyperplane_gins("planar", 10, 5):
    print(I, " cone genus", genus_of_cone(I))
