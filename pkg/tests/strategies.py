from __future__ import annotations

from hypothesis import strategies as st

from gincalc.monomials import borel_closure, from_labels


def monomials(arity: int, max_deg: int = 4):
    labels = st.lists(st.integers(0, arity - 1), min_size=1, max_size=max_deg)
    return labels.map(lambda ls: from_labels(ls, arity))


@st.composite
def borel_ideals(draw, arity: int = 4, max_deg: int = 4, saturated: bool = False):
    gens = draw(st.lists(monomials(arity, max_deg), min_size=1, max_size=3))
    if saturated:
        gens = [m[:-1] + (0,) for m in gens if sum(m[:-1]) > 0] or [(1,) + (0,) * (arity - 1)]
    return borel_closure(gens, arity)
