"""Genus and h^1 bookkeeping along C-rewrite traces, and the bounded search.

A curve's generic initial ideal is reached from the cone over its hyperplane
gin by C-rewrites; each rewrite lowers the arithmetic genus by one.  Steps
that rewrite a generator of degree six or more leave the quintic piece alone,
so each of them adds one to ``h^1(I_C(5))``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from gincalc.monomials import (
    MonomialIdeal,
    graded_piece_dim,
    hilbert_polynomial_curve,
    ideal,
    sheaf_h1_oracle,
)
from gincalc.trees import RewriteStep, RewriteTrace, Ruleset, apply_step, c_successors

I_STEP_DEGREE = 6  # rewrites of generators of this degree or more raise h^1(I(5))


def _gin(ruleset: Ruleset, *gens: str) -> MonomialIdeal:
    return ideal(*gens, arity=ruleset.gin_arity)


ND, PL = Ruleset.NONDEGENERATE, Ruleset.PLANAR

# hyperplane gins of degree-10 curves, keyed by the CLI case names
CASE_GINS: dict[str, tuple[MonomialIdeal, Ruleset]] = {
    "1": (_gin(ND, "x0^3", "x0^2*x1", "x0*x1^2", "x1^3", "x0^2*x2", "x0*x1*x2", "x1^2*x2", "x0*x2^2",
               "x1*x2^2", "x2^3"), ND),
    "2": (_gin(ND, "x0^2", "x0*x1^2", "x1^3", "x0*x1*x2", "x1^2*x2", "x0*x2^2", "x1*x2^2", "x2^4"), ND),
    "3": (_gin(ND, "x0^2", "x0*x1", "x1^3", "x1^2*x2", "x0*x2^2", "x1*x2^3", "x2^4"), ND),
    "4a": (_gin(ND, "x0^2", "x0*x1", "x0*x2", "x1^3", "x1^2*x2^2", "x1*x2^3", "x2^4"), ND),
    "4b": (_gin(ND, "x0^2", "x0*x1", "x1^2", "x0*x2^3", "x1*x2^3", "x2^4"), ND),
    "planar1": (_gin(PL, "x0^4", "x0^3*x1", "x0^2*x1^2", "x0*x1^3", "x1^4"), PL),
    "planar2": (_gin(PL, "x0^3", "x0^2*x1^2", "x0*x1^3", "x1^5"), PL),
}


def cone(gin: MonomialIdeal) -> MonomialIdeal:
    """Same generators, one more variable: the ideal of the cone."""
    return gin.extend()


def ambient_monomials(ruleset: Ruleset, t: int) -> int:
    return comb(t + ruleset.curve_arity - 1, ruleset.curve_arity - 1)


def genus_of_cone(gin: MonomialIdeal) -> int:
    """Arithmetic genus of the cone, ``g = d*m + 1 - h^0(O(m)) + h^0(I(m))``.

    ``m`` is the regularity of the hyperplane gin; the cone's ideal has no
    first cohomology from that twist on.
    """
    ext = cone(gin)
    m = gin.max_degree
    d, _ = hilbert_polynomial_curve(ext)
    n = ext.arity
    return d * m + 1 - comb(m + n - 1, n - 1) + graded_piece_dim(ext, m)


def genus_after_trace(trace: RewriteTrace) -> int:
    """Cone genus minus the number of C-rewrites."""
    return genus_of_cone(trace.start.restrict()) - len(trace.steps)


def i_from_trace(trace: RewriteTrace, threshold: int = I_STEP_DEGREE) -> int:
    return sum(1 for s in trace.steps if s.step_degree >= threshold)


def i_oracle_agreement(trace: RewriteTrace) -> tuple[int, int]:
    """(i counted from the trace, h^1(I(5)) from monomial counts on the end)."""
    return i_from_trace(trace), sheaf_h1_oracle(trace.end, 5).value


def e13_consistent(I: MonomialIdeal, g: int, i: int) -> bool:
    """``h^0(I_C(5)) = h^0(O(5)) - (5d + 1 - g) + i`` for a degree-10 curve."""
    n = I.arity
    return graded_piece_dim(I, 5) == comb(5 + n - 1, n - 1) - (51 - g) + i


# ---------------------------------------------------------------------------
# search


@dataclass(frozen=True)
class CaseContext:
    gin: MonomialIdeal
    ruleset: Ruleset
    reg_cap: int
    target_genus: int

    @property
    def start(self) -> MonomialIdeal:
        return cone(self.gin)

    @property
    def g_gamma(self) -> int:
        return genus_of_cone(self.gin)

    @property
    def steps(self) -> int:
        return self.g_gamma - self.target_genus


@dataclass
class SearchResult:
    max_i: int | None  # None: no admissible trace
    witness: RewriteTrace | None


class _Searcher:
    def __init__(self, ruleset: Ruleset, reg_cap: int, threshold: int = I_STEP_DEGREE):
        self.ruleset = ruleset
        self.cap = reg_cap
        self.threshold = threshold
        self.memo: dict = {}
        self.succ: dict = {}

    def successors(self, I):
        got = self.succ.get(I)
        if got is None:
            got = [(J, s) for J, s in c_successors(I, self.ruleset) if J.max_degree <= self.cap]
            self.succ[I] = got
        return got

    def best(self, I: MonomialIdeal, remaining: int):
        """Max i over admissible continuations, with the first step taken."""
        key = (I, remaining)
        if key in self.memo:
            return self.memo[key]
        if remaining == 0:
            out = (0, None)
        else:
            out = None
            for J, step in self.successors(I):
                sub = self.best(J, remaining - 1)
                if sub is None:
                    continue
                gain = sub[0] + (step.step_degree >= self.threshold)
                if out is None or gain > out[0]:
                    out = (gain, (J, step))
        self.memo[key] = out
        return out

    def witness(self, I: MonomialIdeal, remaining: int) -> RewriteTrace:
        start, steps = I, []
        while remaining:
            _, (I, step) = self.memo[(I, remaining)]
            steps.append(step)
            remaining -= 1
        return RewriteTrace(start, tuple(steps), I)


@lru_cache(maxsize=32)
def _searcher(ruleset: Ruleset, reg_cap: int) -> _Searcher:
    # memo entries depend only on (ideal, remaining), so searches share them
    return _Searcher(ruleset, reg_cap)


def max_i_search(ctx: CaseContext) -> SearchResult:
    """Largest number of degree->=6 rewrites over all admissible traces.

    Admissible: exactly ``g_gamma - target_genus`` Borel-preserving C-rewrites
    from the cone, with every intermediate generator degree within the cap.
    States are memoized on (ideal, remaining steps).
    """
    start = ctx.start
    if ctx.steps < 0:
        return SearchResult(None, None)
    if start.max_degree > ctx.reg_cap:
        return SearchResult(None, None)
    s = _searcher(ctx.ruleset, ctx.reg_cap)
    res = s.best(start, ctx.steps)
    if res is None:
        return SearchResult(None, None)
    return SearchResult(res[0], s.witness(start, ctx.steps))


def reachable_with_i(ctx: CaseContext) -> dict[MonomialIdeal, int]:
    """Every end ideal of an admissible trace, with the i of some trace to it."""
    level = {ctx.start: 0}
    s = _searcher(ctx.ruleset, ctx.reg_cap)
    for _ in range(ctx.steps):
        nxt: dict = {}
        for I, i in level.items():
            for J, step in s.successors(I):
                v = i + (step.step_degree >= I_STEP_DEGREE)
                nxt[J] = max(v, nxt.get(J, -1))
        level = nxt
    return level


@lru_cache(maxsize=100_000)
def _successor_list(I: MonomialIdeal, ruleset: Ruleset) -> tuple:
    return tuple(c_successors(I, ruleset))


def random_trace(start: MonomialIdeal, ruleset: Ruleset, length: int, rng: random.Random) -> RewriteTrace:
    """Uniform random walk of C-rewrites; stops early at a dead end."""
    I, steps = start, []
    for _ in range(length):
        options = _successor_list(I, ruleset)
        if not options:
            break
        I, step = options[rng.randrange(len(options))]
        steps.append(step)
    return RewriteTrace(start, tuple(steps), I)


def genus_drops_by_one(trace: RewriteTrace) -> bool:
    """Each step of the trace lowers the Hilbert-polynomial genus by exactly one."""
    I = trace.start
    d0, g = hilbert_polynomial_curve(I)
    for step in trace.steps:
        I = apply_step(I, step)
        d, g2 = hilbert_polynomial_curve(I)
        if d != d0 or g2 != g - 1:
            return False
        g = g2
    return I == trace.end


def smallest_agreeing_threshold(traces: list[RewriteTrace], candidates=range(4, 9)) -> int | None:
    """Least step-degree threshold for which the counted i matches h^1 on every trace."""
    for t in candidates:
        if all(i_from_trace(tr, t) == sheaf_h1_oracle(tr.end, 5).value for tr in traces):
            return t
    return None


# ---------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class CaseVerdict:
    case: str
    genus: int
    max_i: int | None
    nonproblematic: bool
    condition_met: str | None
    witness: RewriteTrace | None = field(default=None, compare=False)


def nonproblematic_certificate(g: int, i: int, planar: bool = False,
                               eight_secant: bool = True, hyperquadric: bool = True) -> str | None:
    """Name of the first numerical condition that rules the pair out, if any.

    The flags say whether the curve is already known to carry a 6-secant
    through an 8-secant budget, or to lie on a hyperquadric.
    """
    s = g + i
    if planar:
        return "g+i<11+min(g,5)" if s < 11 + min(g, 5) else None
    if s < 4:
        return "g+i<4"
    if eight_secant and s < 10:
        return "8-secant:g+i<10"
    if hyperquadric and s < 7:
        return "hyperquadric:g+i<7"
    if s < min(2 * g, 8):
        return "g+i<min(2g,8)"
    return None


def analyze_case(case: str, genus: int, reg_cap: int, **flags) -> CaseVerdict:
    gin, ruleset = CASE_GINS[case]
    ctx = CaseContext(gin, ruleset, reg_cap, genus)
    res = max_i_search(ctx)
    if res.max_i is None:
        return CaseVerdict(case, genus, None, True, "no admissible trace", None)
    cond = nonproblematic_certificate(genus, res.max_i, ruleset is Ruleset.PLANAR, **flags)
    return CaseVerdict(case, genus, res.max_i, cond is not None, cond, res.witness)


def g_plus_i_check(gin: MonomialIdeal, ruleset: Ruleset, reg_cap: int) -> list[tuple[int, int | None]]:
    """(g, max_i) for every genus from the cone genus down to 0."""
    gg = genus_of_cone(gin)
    out = []
    for g in range(gg, -1, -1):
        out.append((g, max_i_search(CaseContext(gin, ruleset, reg_cap, g)).max_i))
    return out


__all__ = [
    "CASE_GINS", "CaseContext", "CaseVerdict", "SearchResult", "RewriteStep", "analyze_case",
    "cone", "e13_consistent", "g_plus_i_check", "genus_after_trace", "genus_drops_by_one", "genus_of_cone",
    "i_from_trace", "i_oracle_agreement", "max_i_search", "nonproblematic_certificate",
    "random_trace", "reachable_with_i", "smallest_agreeing_threshold",
]
