"""Monomials and monomial ideals.

A monomial is a plain tuple of non-negative exponents, ``(e_0, ..., e_{n-1})``;
the last position is the "last variable" used for saturation.  Ideals are
immutable :class:`MonomialIdeal` values holding their minimal generators in
canonical (revlex-descending) order.
"""

from __future__ import annotations

import re
from operator import le
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, NamedTuple, Sequence

import numpy as np

Monomial = tuple  # tuple[int, ...]


class ArityMismatch(ValueError):
    pass


class NotBorelFixed(ValueError):
    """Raised by criteria that are only valid for Borel-fixed ideals."""


# ---------------------------------------------------------------------------
# single monomials


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(map(le, a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def variable(i: int, arity: int) -> Monomial:
    return tuple(1 if k == i else 0 for k in range(arity))


def times_var(m: Monomial, i: int) -> Monomial:
    return m[:i] + (m[i] + 1,) + m[i + 1:]


def max_variable(m: Monomial) -> int:
    """Index of the greatest variable dividing ``m`` (-1 for the unit)."""
    for i in range(len(m) - 1, -1, -1):
        if m[i]:
            return i
    return -1


def revlex_key(m: Monomial) -> tuple:
    """Sort key: larger key means larger monomial in graded revlex."""
    return (sum(m), tuple(-e for e in reversed(m)))


def revlex_less(m1: Monomial, m2: Monomial) -> bool:
    """True iff ``m1 < m2`` in graded reverse-lexicographic order."""
    if len(m1) != len(m2):
        raise ArityMismatch(f"arity {len(m1)} vs {len(m2)}")
    d1, d2 = sum(m1), sum(m2)
    if d1 != d2:
        return d1 < d2
    for a, b in zip(reversed(m1), reversed(m2)):
        if a != b:
            # last nonzero entry of m1 - m2 negative => m1 is larger
            return a > b
    return False


def borel_move(m: Monomial, i: int, j: int) -> Monomial:
    """Return ``x_i / x_j * m`` for ``i < j``."""
    if not 0 <= i < j < len(m):
        raise ValueError(f"need 0 <= i < j < {len(m)}, got i={i}, j={j}")
    if m[j] == 0:
        raise ValueError(f"x_{j} does not divide {m}")
    out = list(m)
    out[j] -= 1
    out[i] += 1
    return tuple(out)


def label_sequence(m: Monomial) -> tuple[int, ...]:
    """Nondecreasing sequence of variable indices, e.g. x0*x2^2 -> (0, 2, 2)."""
    return tuple(i for i, e in enumerate(m) for _ in range(e))


def from_labels(labels: Iterable[int], arity: int) -> Monomial:
    out = [0] * arity
    for i in labels:
        out[i] += 1
    return tuple(out)


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


_TOKEN = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, arity: int) -> Monomial:
    """Parse ``"x0^2*x1"`` or a whitespace-separated exponent tuple."""
    text = text.strip()
    if not text:
        raise ValueError("empty monomial")
    if text == "1" and arity != 1:
        return (0,) * arity
    if text[0].isdigit():
        exps = tuple(int(t) for t in text.split())
        if len(exps) != arity:
            raise ArityMismatch(f"{text!r} has {len(exps)} exponents, expected {arity}")
        return exps
    out = [0] * arity
    for tok in text.replace(" ", "").split("*"):
        hit = _TOKEN.match(tok)
        if hit is None:
            raise ValueError(f"cannot parse factor {tok!r}")
        i = int(hit.group(1))
        if i >= arity:
            raise ArityMismatch(f"x{i} outside arity {arity}")
        out[i] += int(hit.group(2) or 1)
    return tuple(out)


@lru_cache(maxsize=None)
def monomials_of_degree(arity: int, t: int) -> tuple[Monomial, ...]:
    """All degree-``t`` monomials, sorted revlex-descending."""
    out = []
    for labels in combinations_with_replacement(range(arity), t):
        out.append(from_labels(labels, arity))
    out.sort(key=revlex_key, reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def _monomial_array(arity: int, t: int) -> np.ndarray:
    mons = monomials_of_degree(arity, t)
    if not mons:
        return np.zeros((0, arity), dtype=np.int16)
    return np.array(mons, dtype=np.int16).reshape(len(mons), arity)


# ---------------------------------------------------------------------------
# ideals


def minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Divisibility-minimal subset, canonically ordered (revlex descending)."""
    uniq = sorted(set(gens), key=sum)
    kept: list[Monomial] = []
    for m in uniq:
        if not any(all(map(le, g, m)) for g in kept):
            kept.append(m)
    kept.sort(key=revlex_key, reverse=True)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators."""

    gens: tuple
    arity: int

    def __post_init__(self):
        gens = tuple(tuple(int(e) for e in g) for g in self.gens)
        for g in gens:
            if len(g) != self.arity:
                raise ArityMismatch(f"generator {g} has arity {len(g)}, expected {self.arity}")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in {g}")
        object.__setattr__(self, "gens", minimalize(gens))

    @classmethod
    def trusted(cls, gens: Iterable[Monomial], arity: int) -> "MonomialIdeal":
        """Build from generators already known to be minimal (no checks)."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "gens", tuple(sorted(gens, key=revlex_key, reverse=True)))
        object.__setattr__(obj, "arity", arity)
        return obj

    @classmethod
    def from_strings(cls, texts: Iterable[str], arity: int) -> "MonomialIdeal":
        return cls(tuple(parse_monomial(t, arity) for t in texts), arity)

    def __contains__(self, m: Monomial) -> bool:
        return any(all(map(le, g, m)) for g in self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __str__(self):
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"

    def __repr__(self):
        return f"MonomialIdeal({self}, arity={self.arity})"

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if other.arity != self.arity:
            raise ArityMismatch("sum of ideals of different arity")
        return MonomialIdeal(self.gens + other.gens, self.arity)

    @property
    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def extend(self, extra: int = 1) -> "MonomialIdeal":
        """Same generators in a ring with ``extra`` more (trailing) variables."""
        return MonomialIdeal(tuple(g + (0,) * extra for g in self.gens), self.arity + extra)

    def restrict(self) -> "MonomialIdeal":
        """Image modulo the last variable: drop generators divisible by it."""
        return MonomialIdeal(tuple(g[:-1] for g in self.gens if g[-1] == 0), self.arity - 1)

    def to_text(self) -> str:
        lines = [f"vars: {self.arity}"]
        lines += [format_monomial(g) for g in self.gens]
        return "\n".join(lines) + "\n"


def ideal(*texts: str, arity: int) -> MonomialIdeal:
    """Shorthand: ``ideal("x0^2", "x1", arity=4)``."""
    return MonomialIdeal.from_strings(texts, arity)


def read_ideal(text: str) -> MonomialIdeal:
    """Parse the line-oriented ideal format (``vars: N`` header, ``#`` comments)."""
    arity = None
    gens = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("vars:"):
            arity = int(line.split(":", 1)[1])
            continue
        if arity is None:
            raise ValueError("generator before 'vars:' header")
        gens.append(parse_monomial(line, arity))
    if arity is None:
        raise ValueError("missing 'vars:' header")
    return MonomialIdeal(tuple(gens), arity)


# ---------------------------------------------------------------------------
# Borel-fixity and saturation


def is_borel_fixed(I: MonomialIdeal) -> bool:
    # adjacent moves on minimal generators suffice: x_i/x_j = prod of x_{k-1}/x_k
    for g in I.gens:
        for j in range(1, I.arity):
            if g[j]:
                moved = g[:j - 1] + (g[j - 1] + 1, g[j] - 1) + g[j + 1:]
                if moved not in I:
                    return False
    return True


def is_borel_fixed_bruteforce(I: MonomialIdeal) -> bool:
    """All moves ``x_i/x_j`` for all ``i < j``; independent check of the above."""
    for g in I.gens:
        for j in range(I.arity):
            for i in range(j):
                if g[j] and borel_move(g, i, j) not in I:
                    return False
    return True


def borel_closure(gens: Iterable[Monomial], arity: int | None = None) -> MonomialIdeal:
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator set")
    arity = arity or len(gens[0])
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for m in frontier:
            for j in range(1, arity):
                if m[j]:
                    for i in range(j):
                        mm = borel_move(m, i, j)
                        if mm not in seen:
                            seen.add(mm)
                            nxt.append(mm)
        frontier = nxt
    return MonomialIdeal(tuple(seen), arity)


def is_saturated_borel(I: MonomialIdeal) -> bool:
    """Saturation criterion for Borel-fixed ideals: last variable absent."""
    if not is_borel_fixed(I):
        raise NotBorelFixed(f"{I} is not Borel-fixed")
    return all(g[-1] == 0 for g in I.gens)


def saturate_wrt(I: MonomialIdeal, var: int) -> MonomialIdeal:
    """``I : x_var^infinity`` -- zero out ``var`` in every generator."""
    return MonomialIdeal(tuple(g[:var] + (0,) + g[var + 1:] for g in I.gens), I.arity)


# ---------------------------------------------------------------------------
# Hilbert data


@lru_cache(maxsize=200_000)
def _standard_counts(gens: tuple, arity: int, tmax: int) -> tuple[int, ...]:
    if not gens:
        return tuple(comb(t + arity - 1, arity - 1) for t in range(tmax + 1))
    G = np.array(gens, dtype=np.int16)
    out = []
    for t in range(tmax + 1):
        M = _monomial_array(arity, t)
        if len(M) == 0:
            out.append(0)
            continue
        inside = np.zeros(len(M), dtype=bool)
        for g in G:
            if g.sum() <= t:
                inside |= np.all(M >= g, axis=1)
        out.append(int(len(M) - inside.sum()))
    return tuple(out)


def hilbert_function(I: MonomialIdeal, t: int) -> int:
    """Number of degree-``t`` monomials outside ``I``."""
    if t < 0:
        raise ValueError("degree must be non-negative")
    return _standard_counts(I.gens, I.arity, t)[t]


def hilbert_values(I: MonomialIdeal, tmax: int) -> tuple[int, ...]:
    return _standard_counts(I.gens, I.arity, tmax)


def graded_piece_dim(I: MonomialIdeal, t: int) -> int:
    return comb(t + I.arity - 1, I.arity - 1) - hilbert_function(I, t)


def regularity_borel(I: MonomialIdeal) -> int:
    """Castelnuovo-Mumford regularity of a Borel-fixed ideal (revlex)."""
    if not is_borel_fixed(I):
        raise NotBorelFixed(f"{I} is not Borel-fixed; max generator degree is only an upper bound")
    return I.max_degree


def is_zero_dimensional(I: MonomialIdeal) -> bool:
    """Saturated Borel ideal cuts out points iff it has a pure power of x_{n-2}."""
    k = I.arity - 2
    return any(g[k] > 0 and sum(g) == g[k] for g in I.gens)


def stabilizes(I: MonomialIdeal, extra: int = 3) -> bool:
    """Independent detector: Hilbert function constant from the regularity on."""
    r = I.max_degree
    vals = hilbert_values(I, r + extra)
    return len(set(vals[r:])) == 1


def colength(I: MonomialIdeal) -> int:
    """Degree of a 0-dimensional ideal: stable value of its Hilbert function."""
    r = I.max_degree
    vals = hilbert_values(I, r + 2)
    if not (vals[r] == vals[r + 1] == vals[r + 2]):
        raise ValueError(f"{I} is not 0-dimensional")
    return vals[r]


class HilbertData(NamedTuple):
    values: dict
    regularity: int
    degree: int
    genus: int | None  # None for 0-dimensional schemes (degree is the colength)


class DimensionError(ValueError):
    pass


def hilbert_polynomial_curve(I: MonomialIdeal) -> tuple[int, int]:
    """(degree, arithmetic genus) of the 1-dimensional scheme cut out by ``I``."""
    r = max(I.max_degree, 1)
    h = hilbert_values(I, r + 2)
    d = h[r + 1] - h[r]
    one_minus_g = h[r] - d * r
    if h[r + 2] != d * (r + 2) + one_minus_g:
        raise DimensionError(f"{I}: Hilbert function is not linear from degree {r}")
    if d <= 0:
        raise DimensionError(f"{I}: scheme is not 1-dimensional (slope {d})")
    return d, 1 - one_minus_g


def hilbert_data(I: MonomialIdeal, tmax: int | None = None) -> HilbertData:
    r = I.max_degree
    tmax = max(tmax or 0, r + 2)
    vals = hilbert_values(I, tmax)
    slope = vals[r + 1] - vals[r]
    if slope == 0:
        return HilbertData(dict(enumerate(vals)), r, vals[r], None)
    d, g = hilbert_polynomial_curve(I)
    return HilbertData(dict(enumerate(vals)), r, d, g)


class H1Value(NamedTuple):
    """Value of h^1 of the twisted ideal sheaf, computed from monomial counts.

    Valid only under the stated assumption (vanishing h^2 of the twist).
    """

    value: int
    twist: int
    assumption: str = "h2(I~(t)) = 0"


def sheaf_h1_oracle(I: MonomialIdeal, t: int) -> H1Value:
    """``P(t) - HF(I, t)`` for a saturated 1-dimensional ideal.

    The raw value is returned; it equals h^1 of the twisted ideal sheaf only
    when h^2 vanishes at that twist, which the caller has to justify.
    """
    d, g = hilbert_polynomial_curve(I)
    return H1Value(d * t + 1 - g - hilbert_function(I, t), t)


def hilbert_function_bruteforce(I: MonomialIdeal, t: int) -> int:
    """Plain-Python count, used as an oracle for the numpy path."""
    return sum(1 for m in monomials_of_degree(I.arity, t) if m not in I)


def monomial_count(arity: int, t: int) -> int:
    return comb(t + arity - 1, arity - 1)


def ideal_from_sequences(seqs: Sequence[Sequence[int]], arity: int) -> MonomialIdeal:
    return MonomialIdeal(tuple(from_labels(s, arity) for s in seqs), arity)
