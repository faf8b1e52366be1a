"""Intersection arithmetic on the Hirzebruch surfaces F_1 and F_3, plus the
small genus and Euler-characteristic computations that go with rational
curves of degree 10 in P^4.

Classes are written ``a*e + b*f`` with ``e^2 = -n``, ``e.f = 1``, ``f^2 = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import isqrt, prod
from typing import NamedTuple


@dataclass(frozen=True)
class DivisorClass:
    a: int  # coefficient of e
    b: int  # coefficient of f

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.a, -self.b)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __str__(self):
        return f"{self.a}e+{self.b}f"


@dataclass(frozen=True)
class HirzebruchSurface:
    n: int

    def __post_init__(self):
        if self.n not in (1, 3):
            raise ValueError("only F_1 and F_3 carry the scroll embeddings used here")

    @property
    def canonical(self) -> DivisorClass:
        return DivisorClass(-2, -(self.n + 2))

    @property
    def hyperplane(self) -> DivisorClass:
        # F_1 -> S(1,2) by |e+2f|, F_3 -> S(0,3) by |e+3f|
        return DivisorClass(1, 2 if self.n == 1 else 3)


F1 = HirzebruchSurface(1)
F3 = HirzebruchSurface(3)


def intersect(D1: DivisorClass, D2: DivisorClass, S: HirzebruchSurface) -> int:
    return -S.n * D1.a * D2.a + D1.a * D2.b + D2.a * D1.b


def adjunction_genus(D: DivisorClass, S: HirzebruchSurface) -> Fraction:
    """Genus from ``2g - 2 = D.(D + K)``; non-integral values come back as fractions."""
    return 1 + Fraction(intersect(D, D + S.canonical, S), 2)


def riemann_roch_chi(D: DivisorClass, S: HirzebruchSurface) -> Fraction:
    return 1 + Fraction(intersect(D, D, S) - intersect(D, S.canonical, S), 2)


def degree10_classes(S: HirzebruchSurface, window: tuple[int, int] = (0, 12)) -> list[tuple[DivisorClass, Fraction]]:
    """Classes of hyperplane degree 10 with ``a`` in the window, and their genera.

    The hyperplane class has ``e``-coefficient 1, so for each ``a`` there is at
    most one ``b``.
    """
    H = S.hyperplane
    out = []
    for a in range(window[0], window[1] + 1):
        # H.D = -n*a + b + H.b*a, linear in b with coefficient 1
        b = 10 - intersect(H, DivisorClass(a, 0), S)
        D = DivisorClass(a, b)
        assert intersect(H, D, S) == 10
        out.append((D, adjunction_genus(D, S)))
    return out


def solve_scroll_quadratic(g: int) -> set[int]:
    """Integer roots of ``3a^2 - 21a + 18 + 2g = 0``."""
    disc = 21 * 21 - 12 * (18 + 2 * g)
    if disc < 0:
        return set()
    r = isqrt(disc)
    if r * r != disc:
        return set()
    return {x // 6 for x in (21 - r, 21 + r) if x % 6 == 0}


def vertex_multiplicity_table(g: int, window: tuple[int, int] = (0, 12), max_m: int = 12) -> list[tuple[int, int, Fraction]]:
    """Triples ``(a, m, g~)`` where the proper transform ``(a-m)e + 10f`` on F_3
    has integral adjunction genus ``0 <= g~ <= g``."""
    out = []
    for a in range(window[0], window[1] + 1):
        for m in range(1, max_m + 1):
            gt = adjunction_genus(DivisorClass(a - m, 10), F3)
            if gt.denominator == 1 and 0 <= gt <= g:
                out.append((a, m, gt))
    return out


# ---------------------------------------------------------------------------
# splitting types


class SplittingType(tuple):
    """Nonincreasing integer tuple."""

    def __new__(cls, parts):
        parts = tuple(int(p) for p in parts)
        if any(x < y for x, y in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not nonincreasing")
        return super().__new__(cls, parts)


def splitting_codim(t) -> int:
    return sum(max(0, x - y - 1) for x in t for y in t)


def enumerate_splittings(total: int, rank: int, low: int = -2) -> list[tuple[SplittingType, int]]:
    if not total >= rank >= 1:
        raise ValueError("need total >= rank >= 1")
    found = []
    for parts in combinations_with_replacement(range(total, low - 1, -1), rank):
        if sum(parts) == total:
            t = SplittingType(parts)
            found.append((t, splitting_codim(t)))
    found.sort(key=lambda tc: (tc[1], [-x for x in tc[0]]))
    return found


def special_below(found: list[tuple[SplittingType, int]], bound: int = 4) -> list[tuple[SplittingType, int]]:
    """Non-balanced types whose codimension is below ``bound``."""
    return [(t, c) for t, c in found if 0 < c < bound]


# ---------------------------------------------------------------------------
# genus arithmetic


def twist_vanishing_extremes(d: int, g_max: int, t: int) -> tuple[int, int]:
    """(min over g of chi(O_C(t)), max over g of chi(K_C)) for 0 <= g <= g_max."""
    return t * d - g_max + 1, g_max - 1


def twist_vanishing_check(d: int, g_max: int, t: int) -> bool:
    """True when ``chi(O_C(t)) > chi(K_C)`` for every genus up to ``g_max``."""
    return all(t * d - g + 1 > g - 1 for g in range(g_max + 1))


CASTELNUOVO_MAX = {(10, 4): 9, (4, 3): 1}  # (degree, ambient dim) -> maximal genus


def ci_genus(degrees, ambient_dim: int) -> tuple[int, int]:
    degrees = list(degrees)
    if len(degrees) != ambient_dim - 1:
        raise ValueError("a curve needs ambient_dim - 1 equations")
    d = prod(degrees)
    two_g_minus_2 = d * (sum(degrees) - ambient_dim - 1)
    return d, two_g_minus_2 // 2 + 1


def linkage_genus(g_C: int, d_C: int, d_R: int, ci_degrees, ambient_dim: int = 4) -> Fraction:
    """Genus of the residual curve in a complete intersection."""
    ci_degrees = list(ci_degrees)
    if d_R < 1:
        raise ValueError("residual degree must be positive")
    if d_C + d_R != prod(ci_degrees):
        raise ValueError("degrees of linked curves must add up to the complete intersection degree")
    return g_C - Fraction((sum(ci_degrees) - ambient_dim - 1) * (d_C - d_R), 2)


class ChiBounds(NamedTuple):
    bounds: tuple[int, int, int]
    caps: tuple[int, int, int]


def reducible_chi_bounds(a: int, b: int, n: int) -> ChiBounds:
    """Lower bounds for h^0(O_C(5)) of a union of degree-a and degree-b rational
    curves meeting in ``n`` points, and the matching dimension caps."""
    if n < 1:
        raise ValueError("the components must meet (n >= 1)")
    if a + b != 10:
        raise ValueError("component degrees must add up to 10")
    bounds = (5 * (a + b) + 2 - n, 21 + 5 * a - n, 40 - n)
    return ChiBounds(bounds, tuple(x - 1 for x in bounds))
