"""Borel-fixed staircases of points, enumerated from partitions.

This path never touches the tree rewriting code, so it can be used to
cross-check the Lambda-reachable sets.

In two variables ``x0, x1`` a Borel staircase of size ``N`` is a strictly
decreasing sequence ``lam_0 > lam_1 > ... > 0`` with sum ``N``: the standard
monomials are ``x0^a x1^b`` with ``b < lam_a``.  In three variables the
staircase is a stack of such layers, one per power of ``x0``, where layer
``a + 1`` shifted by ``x1`` must fit inside layer ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from gincalc.monomials import MonomialIdeal, times_var


def distinct_partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Strictly decreasing positive sequences summing to ``n``."""
    largest = n if largest is None else min(largest, n)
    if n == 0:
        yield ()
        return
    for first in range(largest, 0, -1):
        for rest in distinct_partitions(n - first, first - 1):
            yield (first,) + rest


def _layer_fits(upper: tuple[int, ...], lower: tuple[int, ...]) -> bool:
    # x1 * (layer a+1) inside layer a  <=>  upper[b] <= lower[b+1]
    return all(u <= (lower[b + 1] if b + 1 < len(lower) else 0) for b, u in enumerate(upper))


def _layer_stacks(n: int, below: tuple[int, ...] | None) -> Iterator[tuple[tuple[int, ...], ...]]:
    if n == 0:
        yield ()
        return
    for size in range(n, 0, -1):
        for lam in distinct_partitions(size):
            if below is not None and not _layer_fits(lam, below):
                continue
            for rest in _layer_stacks(n - size, lam):
                yield (lam,) + rest


def staircase_monomials(n: int, cut: int) -> Iterator[frozenset]:
    """Standard-monomial sets of all Borel staircases of size ``n``."""
    if cut == 2:
        for lam in distinct_partitions(n):
            yield frozenset((a, b) for a, l in enumerate(lam) for b in range(l))
    elif cut == 3:
        for stack in _layer_stacks(n, None):
            yield frozenset(
                (a, b, c) for a, lam in enumerate(stack) for b, l in enumerate(lam) for c in range(l)
            )
    else:
        raise ValueError("only cuts of two or three variables are supported")


def staircase_to_ideal(std: frozenset, cut: int) -> MonomialIdeal:
    """Ideal in ``cut + 1`` variables whose standard monomials (without the
    last variable) are ``std``."""
    cands = {times_var(s, i) for s in std for i in range(cut)} - std
    return MonomialIdeal(tuple(m + (0,) for m in cands), cut + 1)


@dataclass(frozen=True)
class StaircaseFilter:
    reg_cap: int | None = None
    nondegenerate: bool = False  # no linear generators
    ellia_peskine: bool = False


def ellia_peskine_ok(I: MonomialIdeal) -> bool:
    """Gap condition on the x1-degrees of a planar staircase.

    ``lam_j`` is the x1-exponent of the generator with x0-exponent ``j``;
    consecutive values must drop by one or two.
    """
    lam = staircase_partition(I)
    return all(lam[i] - 1 >= lam[i + 1] >= lam[i] - 2 for i in range(len(lam) - 1))


def staircase_partition(I: MonomialIdeal) -> tuple[int, ...]:
    """Column heights of a staircase in ``x0, x1`` (trailing variables ignored)."""
    pure = {g[0]: g[1] for g in I.gens if sum(g) == g[0] + g[1]}
    k = max(a for a, b in pure.items() if b == 0)
    return tuple(pure[a] for a in range(k))


def passes(I: MonomialIdeal, filt: StaircaseFilter) -> bool:
    if filt.reg_cap is not None and I.max_degree > filt.reg_cap:
        return False
    if filt.nondegenerate and any(sum(g) == 1 for g in I.gens):
        return False
    if filt.ellia_peskine and not ellia_peskine_ok(I):
        return False
    return True


def enumerate_staircases(colength: int, cut: int, filt: StaircaseFilter = StaircaseFilter()) -> list[MonomialIdeal]:
    if colength < 1:
        raise ValueError("colength must be positive")
    found = []
    for std in staircase_monomials(colength, cut):
        I = staircase_to_ideal(std, cut)
        if passes(I, filt):
            found.append(I)
    return sorted(found, key=lambda J: [list(g) for g in J.gens])


def quadratic_generator_count(I: MonomialIdeal) -> int:
    return sum(1 for g in I.gens if sum(g) == 2)


def hyperplane_gins(ambient: str, degree: int, reg_cap: int, ellia_peskine: bool = True) -> list[MonomialIdeal]:
    """Candidate generic initial ideals of a hyperplane section.

    ``ambient`` is ``"p3"`` (points in P^3 from a nondegenerate curve in P^4)
    or ``"planar"`` (points on a line of a plane curve's hyperplane).
    """
    if ambient == "p3":
        return enumerate_staircases(degree, 3, StaircaseFilter(reg_cap, nondegenerate=True))
    if ambient == "planar":
        return enumerate_staircases(degree, 2, StaircaseFilter(reg_cap, nondegenerate=True, ellia_peskine=ellia_peskine))
    raise ValueError(f"unknown ambient {ambient!r}")
