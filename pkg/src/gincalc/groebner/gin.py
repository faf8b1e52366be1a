"""Generic initial ideals by random coordinate changes.

Two independent routes compute an initial ideal: Buchberger on the changed
generators, and exact linear algebra on graded pieces (``I_t`` is spanned by
``x_j * I_{t-1}`` and the degree-``t`` generators; its leading terms are the
pivot columns of the reduced echelon form).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from gincalc.groebner.buchberger import buchberger, initial_ideal
from gincalc.groebner.field import GF, PrimeField
from gincalc.groebner.linalg import (
    matmul_mod,
    merge,
    monomial_index,
    multiply_by_variables,
    random_invertible,
    rref,
    sym_power,
)
from gincalc.groebner.poly import Polynomial
from gincalc.monomials import (
    MonomialIdeal,
    graded_piece_dim,
    is_borel_fixed,
    monomials_of_degree,
    revlex_key,
    saturate_wrt,
)

DEFAULT_CAP = 8


class GinInstability(RuntimeError):
    pass


@dataclass(frozen=True)
class LinearChange:
    """``x_i -> sum_j matrix[i][j] x_j`` over F_p."""

    matrix: np.ndarray = field(compare=False)
    p: int = GF.p

    def __post_init__(self):
        if len(rref(self.matrix, self.p)[1]) != self.matrix.shape[0]:
            raise ValueError("singular coordinate change")

    @classmethod
    def random(cls, n: int, rng: np.random.Generator, p: int = GF.p) -> "LinearChange":
        return cls(random_invertible(n, p, rng), p)

    def apply_rows(self, rows: np.ndarray, t: int) -> np.ndarray:
        return matmul_mod(rows, sym_power(self.matrix, t, self.p), self.p)

    def apply(self, polys: list[Polynomial]) -> list[Polynomial]:
        out = []
        for t, rows in pieces_from_polys(polys, self.p).items():
            arity = polys[0].arity
            out += rows_to_polys(self.apply_rows(rows, t), arity, t, PrimeField(self.p))
        return out


# ---------------------------------------------------------------------------
# conversions


def pieces_from_polys(polys: list[Polynomial], p: int) -> dict[int, np.ndarray]:
    """Group homogeneous polynomials by degree into coefficient matrices."""
    if not polys:
        return {}
    arity = polys[0].arity
    by_deg: dict[int, list] = {}
    for f in polys:
        if not f:
            continue
        if not f.homogeneous:
            raise ValueError("homogeneous polynomials expected")
        by_deg.setdefault(f.degree, []).append(f)
    out = {}
    for t, fs in sorted(by_deg.items()):
        idx = monomial_index(arity, t)
        M = np.zeros((len(fs), len(idx)), dtype=np.int64)
        for r, f in enumerate(fs):
            for m, c in f.terms.items():
                M[r, idx[m]] = int(c) % p
        out[t] = M
    return out


def rows_to_polys(rows: np.ndarray, arity: int, t: int, fld=GF) -> list[Polynomial]:
    mons = monomials_of_degree(arity, t)
    out = []
    for row in rows:
        nz = np.flatnonzero(row)
        if len(nz):
            out.append(Polynomial({mons[k]: int(row[k]) for k in nz}, arity, fld))
    return out


# ---------------------------------------------------------------------------
# graded pieces


def graded_pieces(pieces: dict[int, np.ndarray], arity: int, cap: int, p: int) -> dict[int, tuple[np.ndarray, list[int]]]:
    """RREF bases of ``I_t`` for ``t <= cap`` from generator pieces."""
    out: dict = {}
    prev = None
    for t in range(0, cap + 1):
        n = len(monomials_of_degree(arity, t))
        R, piv = np.zeros((0, n), dtype=np.int64), []
        if t in pieces:
            R, piv = rref(pieces[t], p)
        if prev is not None and len(prev[0]):
            R, piv = merge(R, piv, multiply_by_variables(prev[0], arity, t - 1), p)
        out[t] = (R, piv)
        prev = (R, piv)
    return out


def ideal_from_pivots(graded: dict[int, tuple[np.ndarray, list[int]]], arity: int) -> MonomialIdeal:
    lead = []
    for t, (_, piv) in graded.items():
        mons = monomials_of_degree(arity, t)
        lead += [mons[c] for c in piv]
    return MonomialIdeal(tuple(lead), arity)


def initial_ideal_linear(polys: list[Polynomial], cap: int = DEFAULT_CAP, change: LinearChange | None = None,
                         p: int = GF.p) -> MonomialIdeal:
    arity = polys[0].arity
    pieces = pieces_from_polys(polys, p)
    if change is not None:
        pieces = {t: change.apply_rows(M, t) for t, M in pieces.items()}
    return ideal_from_pivots(graded_pieces(pieces, arity, cap, p), arity)


def graded_dims(polys: list[Polynomial], cap: int, p: int = GF.p) -> list[int]:
    arity = polys[0].arity
    g = graded_pieces(pieces_from_polys(polys, p), arity, cap, p)
    return [len(g[t][1]) for t in range(cap + 1)]


def truncate(I: MonomialIdeal, cap: int) -> MonomialIdeal:
    return MonomialIdeal(tuple(g for g in I.gens if sum(g) <= cap), I.arity)


# ---------------------------------------------------------------------------
# gin


def generic_order_key(I: MonomialIdeal, cap: int) -> tuple:
    """Larger key = more generic: compare graded pieces degree by degree."""
    key = []
    for t in range(cap + 1):
        mons = [m for m in monomials_of_degree(I.arity, t) if m in I]
        key.append((len(mons), sorted((revlex_key(m) for m in mons), reverse=True)))
    return tuple(key)


@dataclass
class GinEstimate:
    ideal: MonomialIdeal
    stable: bool
    trials: list
    resampled: int = 0
    seed: int | None = None
    p: int = GF.p
    cap: int = DEFAULT_CAP


def gin_estimate(polys: list[Polynomial], trials: int = 5, seed: int = 0, cap: int = DEFAULT_CAP,
                 method: str = "buchberger", retry_budget: int = 10) -> GinEstimate:
    """Initial ideals after ``trials`` independent random changes.

    Each trial gets its own RNG stream spawned from ``seed``.  A non-Borel
    result means the change was not generic; it is resampled up to
    ``retry_budget`` times before giving up.
    """
    if trials < 2:
        raise ValueError("need at least two trials")
    p = polys[0].field.p if isinstance(polys[0].field, PrimeField) else GF.p
    arity = polys[0].arity
    streams = np.random.SeedSequence(seed).spawn(trials)
    results, resampled = [], 0
    for ss in streams:
        rng = np.random.default_rng(ss)
        for _ in range(retry_budget + 1):
            A = LinearChange.random(arity, rng, p)
            if method == "linear":
                J = initial_ideal_linear(polys, cap, A, p)
            elif method == "buchberger":
                J = initial_ideal(buchberger(A.apply(polys), cap))
                J = truncate(J, cap)
            else:
                raise ValueError(f"unknown method {method!r}")
            if is_borel_fixed(J):
                break
            resampled += 1
        else:
            raise GinInstability(f"no Borel-fixed initial ideal in {retry_budget + 1} changes")
        results.append(J)
    best = max(results, key=lambda J: generic_order_key(J, cap))
    return GinEstimate(best, len(set(results)) == 1, results, resampled, seed, p, cap)


# ---------------------------------------------------------------------------
# hyperplane sections


def restriction_matrix(arity: int, t: int, h: np.ndarray, p: int) -> np.ndarray:
    """Substitution ``x_{n-1} -> h(x_0, ..., x_{n-2})`` on degree-``t`` forms."""
    small = arity - 1
    out_idx = monomial_index(small, t)
    rows = monomials_of_degree(arity, t)
    R = np.zeros((len(rows), len(out_idx)), dtype=np.int64)
    # powers of h as dense vectors over monomials of each degree
    hpow = [np.ones(1, dtype=np.int64)]
    for e in range(1, t + 1):
        prev = hpow[-1]
        idx_prev = monomials_of_degree(small, e - 1)
        idx = monomial_index(small, e)
        cur = np.zeros(len(idx), dtype=np.int64)
        for k, m in enumerate(idx_prev):
            if prev[k]:
                for j in range(small):
                    if h[j]:
                        cur[idx[m[:j] + (m[j] + 1,) + m[j + 1:]]] += prev[k] * h[j]
        hpow.append(cur % p)
    for r, m in enumerate(rows):
        base, e = m[:-1], m[-1]
        vec = hpow[e]
        for k, mm in enumerate(monomials_of_degree(small, e)):
            if vec[k]:
                c = out_idx[tuple(a + b for a, b in zip(base, mm))]
                R[r, c] = (R[r, c] + vec[k]) % p
    return R


@dataclass
class RestrictionCheck:
    equal: bool
    curve_side: MonomialIdeal
    section_side: MonomialIdeal


def restriction_saturation_check(polys: list[Polynomial], seed: int = 0, cap: int = DEFAULT_CAP) -> RestrictionCheck:
    """Compare two routes to the gin of a general hyperplane section.

    Curve side: gin of the curve, last variable dropped, saturated in the new
    last variable.  Section side: substitute a random linear form for the last
    variable, then take a gin in one variable fewer and saturate.
    """
    arity = polys[0].arity
    p = polys[0].field.p
    rng_curve, rng_sec = (np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(2))
    lhs = initial_ideal_linear(polys, cap, LinearChange.random(arity, rng_curve, p), p)
    lhs = saturate_wrt(lhs.restrict(), arity - 2)

    h = rng_sec.integers(0, p, size=arity - 1, dtype=np.int64)
    pieces = pieces_from_polys(polys, p)
    sec = {t: matmul_mod(M, restriction_matrix(arity, t, h, p), p) for t, M in pieces.items()}
    B = LinearChange.random(arity - 1, rng_sec, p)
    sec = {t: B.apply_rows(M, t) for t, M in sec.items()}
    rhs = ideal_from_pivots(graded_pieces(sec, arity - 1, cap, p), arity - 1)
    rhs = saturate_wrt(rhs, arity - 2)
    return RestrictionCheck(lhs == rhs, lhs, rhs)


def macaulay_agreement(polys: list[Polynomial], cap: int = DEFAULT_CAP) -> bool:
    """Hilbert functions of the ideal and of its Buchberger initial ideal agree up to ``cap``."""
    dims = graded_dims(polys, cap, polys[0].field.p)
    J = initial_ideal(buchberger(polys, cap))
    return all(dims[t] == graded_piece_dim(J, t) for t in range(cap + 1))
