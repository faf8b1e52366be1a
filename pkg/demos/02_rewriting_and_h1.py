"""
Lowering the genus one rewrite at a time
========================================

Start from the cone over a hyperplane gin and apply C-rules.  Each rule
drops the genus by one; rewriting a generator of degree six or more also
adds one to h^1 of the ideal sheaf twisted by 5.
"""

import random

from gincalc.cohomology import CASE_GINS, CaseContext, cone, g_plus_i_check, i_from_trace, max_i_search, random_trace
from gincalc.monomials import hilbert_polynomial_curve, sheaf_h1_oracle

gin, rules = CASE_GINS["2"]
start = cone(gin)
print("start", start, hilbert_polynomial_curve(start))

rng = random.Random(1)
trace = random_trace(start, rules, 6, rng)
for step in trace.steps:
    print(f"rewrite degree {step.step_degree}:", step.leaf)
print("end", trace.end, hilbert_polynomial_curve(trace.end))
print("i from the trace:", i_from_trace(trace), " h^1(I(5)):", sheaf_h1_oracle(trace.end, 5).value)

# largest i over every trace down to genus 1, inside 7-regular ideals
res = max_i_search(CaseContext(gin, rules, 7, 1))
print("max i at genus 1:", res.max_i)
print("one maximizer:", res.witness.end)

# the whole (genus, max i) table for this case
print(g_plus_i_check(gin, rules, 7))
