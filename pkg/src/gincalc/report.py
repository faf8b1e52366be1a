"""Claim registry: each registered statement is recomputed and compared with
its registered expectation.

Status is ``match`` when the computed value equals the expected one,
``documented-discrepancy`` when it differs on a claim listed in
``DISCREPANCIES``, and ``mismatch`` otherwise.  Reports are deterministic for a
fixed config; wall-clock times are only recorded when ``timings`` is set.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Any, Callable

import numpy as np

from gincalc.cohomology import (
    CASE_GINS,
    CaseContext,
    cone,
    e13_consistent,
    g_plus_i_check,
    genus_drops_by_one,
    genus_of_cone,
    i_from_trace,
    random_trace,
    reachable_with_i,
    smallest_agreeing_threshold,
)
from gincalc.enumeration import StaircaseFilter, enumerate_staircases, hyperplane_gins
from gincalc.groebner import curves as gcurves
from gincalc.groebner.field import DEFAULT_PRIME, PrimeField
from gincalc.groebner.gin import gin_estimate, macaulay_agreement, restriction_saturation_check
from gincalc.groebner.poly import parse_polynomial
from gincalc.monomials import (
    MonomialIdeal,
    borel_closure,
    colength,
    ideal,
    read_ideal,
    regularity_borel,
    sheaf_h1_oracle,
)
from gincalc.surfaces import (
    F1,
    F3,
    DivisorClass,
    adjunction_genus,
    ci_genus,
    degree10_classes,
    enumerate_splittings,
    linkage_genus,
    reducible_chi_bounds,
    riemann_roch_chi,
    solve_scroll_quadratic,
    special_below,
    splitting_codim,
    twist_vanishing_check,
    twist_vanishing_extremes,
)
from gincalc.trees import Ruleset, lambda_reachable_set, nonleaf_count, to_dot, tree_from_ideal

STATUSES = ("match", "mismatch", "documented-discrepancy")

DEFAULT_REG_CAPS = {"1": 7, "2": 7, "3": 7, "4a": 7, "4b": 7, "planar1": 7, "planar2": 8}

# Where each claim sits in the source text, and a short formula that appears
# there verbatim.
ANCHORS: dict[str, tuple[str, str]] = {
    "five-hyperplane-gins": ("list of hyperplane gins, nondegenerate curves",
                             r"\mbox{Borel}(x_1x_2^2)+(x_0^2,x_2^4)"),
    "planar-hyperplane-gins": ("hyperplane gins of curves spanning a hyperplane",
                               r"(x_1^5,x_0x_1^3,x_0^2x_1^2,x_0^3)"),
    "planar-gins-need-gap-condition": ("hyperplane gins of curves spanning a hyperplane",
                                       r"\mbox{Borel}(x_1^4)"),
    "lambda-reachable-equals-staircases": ("Lambda-rules for nondegenerate curves", r"\emptyset \mapsto"),
    "nonleaf-count-equals-colength": ("Lambda-rules for nondegenerate curves", r"\deg(\Gamma^{\prime})=\deg(\Gamma)$+1"),
    "staircase-counts-nondegenerate": ("Lambda-rules for nondegenerate curves", r"\emptyset \mapsto"),
    "staircase-counts-planar": ("Lambda-rules for curves spanning hyperplanes", r"\emptyset \mapsto"),
    "eight-nonleaf-vertices": ("two quadratic generators", r"\mbox{Borel}(x_2^3)+(x_0x_1,x_0^2)"),
    "excluded-ideal-not-4-regular": ("two quadratic generators", r"(x_1x_2^2)+(x_2^5)"),
    "cone-genus-1": ("case Borel(x_2^3)", r"g_{\Gamma}=6"),
    "cone-genus-2": ("case Borel(x_1x_2^2)+(x_0^2,x_2^4)", r"g_{\Gamma}=7"),
    "cone-genus-3": ("third hyperplane gin", r"g_{\Gamma}=8"),
    "cone-genus-4a": ("fourth hyperplane gin", r"g_{\Gamma}=9"),
    "cone-genus-4b": ("fourth hyperplane gin", r"g_{\Gamma}=9"),
    "cone-genus-planar1": ("curves spanning hyperplanes", r"g_{\Gamma}=11"),
    "cone-genus-planar2": ("curves spanning hyperplanes", r"g_{\Gamma}=12"),
    "case1-genus0-max-i": ("case Borel(x_2^3), rational curves", r"i \leq 1"),
    "case2-genus1-max-i": ("case Borel(x_1x_2^2)+(x_0^2,x_2^4)", r"$i=3$"),
    "case2-genus2-max-i": ("case Borel(x_1x_2^2)+(x_0^2,x_2^4), genus two", r"i \leq 2"),
    "case3-max-i": ("third hyperplane gin, 7-regular curves", r"i \leq 3"),
    "case4-max-i-at-most-5": ("fourth hyperplane gin, genus at most 7", r"$i \leq 5$"),
    "planar1-g-plus-i-at-most-10": ("curves spanning hyperplanes", r"g+i \leq 10"),
    "planar2-g-plus-i-at-most-12": ("curves spanning hyperplanes", r"g+i \leq 12"),
    "g-plus-i-bound": ("bound by the cone genus", r"g+i \leq 6"),
    "figure6-witness-i": ("rational curves over Borel(x_2^3)", r"(x_2^5,x_2^4x_3^2,x_2^3x_3^4)"),
    "figure7-witness-i": ("genus one over Borel(x_1x_2^2)+(x_0^2,x_2^4)", r"(x_2^7,x_2^6x_3,x_2^5x_3^2,x_2^4x_3^3)"),
    "quintic-piece-identity": ("dimension count in degree five", r"126-(5 \times 10-g+1)+i"),
    "random-trace-genus-drop": ("effect of a single C-rule", r"\chi(\Gamma^{\prime})=\chi(\Gamma)+1"),
    "random-trace-h1-count": ("h^1 counts rewrites in degree six and up", r"h^1(\mathcal{I}_{C/H}(5))=h^1(\mathcal{I}_{C/\mathbb{P}^4}(5))"),
    "planar-step-threshold": ("C-rules for curves spanning hyperplanes", r"h^1(\mathcal{I}_{C/H}(5)"),
    "scroll-genus9-roots": ("curves on smooth cubic scrolls", r"$a=3$ or $a=4$"),
    "scroll-genus8-roots": ("curves on smooth cubic scrolls", r"3a^2-21a+18+2g=0"),
    "no-genus8-degree10-class": ("Castelnuovo curves of genus 8", r"a=\frac{2}{7}g+1"),
    "chi-integral-on-window": ("Riemann-Roch on F_3", r"\chi(O_{\mathbb{F}_{3}})=1"),
    "chi-displayed-values": ("Riemann-Roch on F_1 and F_3", r"\chi(ae+bf)=\frac{57}{2}"),
    "s03-genus-formula": ("curves on the cone over a twisted cubic", r"a=\frac{2}{7}g+1"),
    "s03-vertex-proper-transform": ("curves through the vertex", r"a-m=\frac{2}{7}\stackrel{\sim}{g}+1"),
    "proper-transform-chi-parity": ("curves through the vertex", r"[\stackrel{\sim}{C}]=e+10f"),
    "splitting-unique-codim4": ("splitting strata", r"(4,3,2,1)"),
    "splitting-balanced": ("splitting strata", r"f^* T_{\mathbb{P}^4}(-1)"),
    "splitting-enumeration-10x4": ("splitting strata", r"f^* T_{\mathbb{P}^4}(-1)"),
    "splitting-special-floor": ("splitting strata", r"(4,3,2,1)"),
    "twist-vanishing": ("canonical twist comparison", r"2g(C)-2-g(C)+1"),
    "ci-genus-223": ("complete intersection of type (2,2,3)", r"g(X)=13"),
    "residual-genus": ("curve residual in a (2,2,3) complete intersection", r"g(R)=16"),
    "reducible-chi-caps": ("unions of two rational curves", r"\dim R_{a,b,n} \leq 5(a+b)+1-n"),
    "quartic-gin": ("rational normal quartic", r"(x_0^2,x_0x_1,x_0x_2,x_1^2,x_1x_2,x_2^2)"),
    "quartic-gin-linear-route": ("rational normal quartic", r"(x_0^2,x_0x_1,x_0x_2,x_1^2,x_1x_2,x_2^2)"),
    "union-leadterm-claim": ("unions of plane quintics", r"(x_1x_4,x_0x_4,x_1x_3,x_0x_3,\mbox{lt}(f),\mbox{lt}(g))"),
    "union-gin-max-degree": ("unions of plane quintics", r"\mbox{in }\mathcal{I}_C"),
    "restriction-saturation": ("gin of a general hyperplane section", r"\mbox{gin}(\mathcal{I}_{C/H})"),
    "macaulay-agreement": ("flat degeneration to the initial ideal", r"\mbox{in }\mathcal{I}_C"),
    "generic-curve-6-regular": ("generic splitting type", r"\bigwedge^2 (f^* T_{\mathbb{P}^4}(-1))^{*}"),
}

# Claims whose registered expectation is known to be off; a differing
# computed value there is reported but does not fail the run.
DISCREPANCIES = frozenset({
    "chi-displayed-values",
    "s03-genus-formula",
    "s03-vertex-proper-transform",
    "proper-transform-chi-parity",
    "splitting-special-floor",
    "residual-genus",
    "planar-step-threshold",
})


# ---------------------------------------------------------------------------
# records


@dataclass(frozen=True)
class Anchor:
    location: str
    quote: str


@dataclass(frozen=True)
class ClaimRecord:
    id: str
    anchor: Anchor
    computed: Any
    expected: Any
    status: str
    runtime_ms: int = 0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")


@dataclass
class VerifyConfig:
    seed: int = 0
    p: int = DEFAULT_PRIME
    reg_caps: dict = field(default_factory=lambda: dict(DEFAULT_REG_CAPS))
    traces: int = 1000
    curves: int = 20
    restriction_curves: int = 5
    pairs: int = 50
    gin_trials: int = 5
    timings: bool = False
    only: tuple = ()  # restrict to these claim ids; empty means all

    def echo(self) -> dict:
        d = asdict(self)
        d["only"] = list(self.only)
        return d


@dataclass
class Report:
    claims: list
    config: dict
    summary: dict
    witnesses: dict = field(default_factory=dict)  # name -> ideal text


def summarize(claims: list[ClaimRecord]) -> dict:
    out = {s: 0 for s in STATUSES}
    for c in claims:
        out[c.status] += 1
    out["total"] = len(claims)
    return out


def _plain(x):
    """JSON-shaped copy: tuples become lists, fractions become strings."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, MonomialIdeal):
        return str(x)
    return x


def status_for(claim_id: str, computed, expected) -> str:
    if computed == expected:
        return "match"
    return "documented-discrepancy" if claim_id in DISCREPANCIES else "mismatch"


# ---------------------------------------------------------------------------
# shared computations


def _case_ideal_strings(keys) -> list[str]:
    return sorted(str(CASE_GINS[k][0]) for k in keys)


_B = borel_closure([(0, 1, 2, 0, 0)], 5)
FIG6 = _B + ideal("x2^5", "x2^4*x3^2", "x2^3*x3^4", arity=5)
FIG7 = _B + ideal("x0^2", "x2^7", "x2^6*x3", "x2^5*x3^2", "x2^4*x3^3", arity=5)
QUARTIC_GIN = ideal("x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2", "x2^2", arity=5)

# a fixed admissible pair, checked alongside the random ones
_PAIR_F = "x0^5 + x1^5 + x0*x2^4 + 3*x1*x2^4"
_PAIR_G = "x3^5 + x4^5 + x2^4*x3 + 5*x2^4*x4"


class _Context:
    def __init__(self, cfg: VerifyConfig):
        self.cfg = cfg
        self.field = PrimeField(cfg.p)

    def table(self, case: str) -> list[tuple[int, int | None]]:
        return self._tables[case]

    @cached_property
    def _tables(self) -> dict:
        return {c: g_plus_i_check(gin, rs, self.cfg.reg_caps[c]) for c, (gin, rs) in CASE_GINS.items()}

    def ctx(self, case: str, genus: int) -> CaseContext:
        gin, rs = CASE_GINS[case]
        return CaseContext(gin, rs, self.cfg.reg_caps[case], genus)

    def max_i(self, case: str, genus: int):
        return dict(self.table(case))[genus]

    @cached_property
    def traces(self) -> dict:
        rng = random.Random(self.cfg.seed)
        out = {}
        for c, (gin, rs) in CASE_GINS.items():
            top = genus_of_cone(gin)
            out[c] = [random_trace(cone(gin), rs, rng.randint(1, top), rng) for _ in range(self.cfg.traces)]
        return out

    @cached_property
    def quartic_polys(self):
        return gcurves.curve_ideal_from_param(gcurves.rational_normal_curve(4), 2, self.cfg.p)

    def rng(self, tag: int) -> np.random.Generator:
        return np.random.default_rng([self.cfg.seed, tag])


def _all_reachable_consistent(cx: _Context) -> bool:
    for c, (gin, _) in CASE_GINS.items():
        for g in range(genus_of_cone(gin) + 1):
            for J, i in reachable_with_i(cx.ctx(c, g)).items():
                if not e13_consistent(J, g, i):
                    return False
    return True


def _g_plus_i_ok(cx: _Context) -> bool:
    for c, (gin, _) in CASE_GINS.items():
        gg = genus_of_cone(gin)
        if any(i is not None and g + i > gg for g, i in cx.table(c)):
            return False
    return True


def _planar_g_plus_i(cx: _Context, case: str) -> int:
    # the cone itself is reducible, so at least one rewrite is applied
    gg = genus_of_cone(CASE_GINS[case][0])
    return max(g + i for g, i in cx.table(case) if i is not None and g < gg)


def _lambda_vs_staircases(cx: _Context) -> bool:
    for rs, cut in ((Ruleset.NONDEGENERATE, 3), (Ruleset.PLANAR, 2)):
        for d in range(1, 11):
            if lambda_reachable_set(d, rs) != set(enumerate_staircases(d, cut)):
                return False
    return True


def _nonleaf_vs_colength(cx: _Context) -> bool:
    for cut in (3, 2):
        for d in range(1, 11):
            for J in enumerate_staircases(d, cut):
                if nonleaf_count(tree_from_ideal(J)) != colength(J):
                    return False
    return True


def _staircase_counts(cut: int) -> list[int]:
    return [len(enumerate_staircases(d, cut)) for d in range(1, 11)]


def _planar_without_gap(cx: _Context) -> bool:
    strict = set(hyperplane_gins("planar", 10, 5))
    loose = set(hyperplane_gins("planar", 10, 5, ellia_peskine=False))
    return strict < loose


def _random_trace_drop(cx: _Context) -> bool:
    return all(genus_drops_by_one(tr) for trs in cx.traces.values() for tr in trs)


def _random_trace_h1(cx: _Context) -> bool:
    return all(i_from_trace(tr) == sheaf_h1_oracle(tr.end, 5).value for trs in cx.traces.values() for tr in trs)


def _planar_threshold(cx: _Context):
    trs = cx.traces["planar1"] + cx.traces["planar2"]
    return smallest_agreeing_threshold(trs)


def _no_genus8(cx: _Context) -> bool:
    return all(g != 8 for S in (F1, F3) for _, g in degree10_classes(S))


def _chi_integral(cx: _Context) -> bool:
    return all(riemann_roch_chi(D, S).denominator == 1 for S in (F1, F3) for D, _ in degree10_classes(S))


def _chi_displayed(cx: _Context) -> list:
    vals = [riemann_roch_chi(DivisorClass(4, 10), F3), riemann_roch_chi(DivisorClass(5, 10), F3),
            riemann_roch_chi(DivisorClass(1, 1), F1), riemann_roch_chi(DivisorClass(3, 7), F1),
            riemann_roch_chi(DivisorClass(4, 6), F1)]
    return [str(v) for v in vals]


def _vertex_transforms(cx: _Context) -> list:
    # integral proper-transform genera at most 8, as (a - m, genus) pairs
    out = []
    for c in range(0, 13):
        g = adjunction_genus(DivisorClass(c, 10), F3)
        if g.denominator == 1 and 0 <= g <= 8:
            out.append([c, int(g)])
    return out


def _quartic_gin(cx: _Context, method: str) -> list:
    est = gin_estimate(cx.quartic_polys, trials=cx.cfg.gin_trials, seed=cx.cfg.seed, cap=4, method=method)
    return [str(est.ideal), est.stable]


def _union_pairs(cx: _Context) -> int:
    rng = cx.rng(3)
    ok = 0
    for _ in range(cx.cfg.pairs):
        f = gcurves.random_admissible_quintic((0, 1, 2), rng, cx.field)
        g = gcurves.random_admissible_quintic((2, 3, 4), rng, cx.field)
        ok += gcurves.verify_leadterm_claim(f, g)
    fixed = (parse_polynomial(_PAIR_F, 5, cx.field), parse_polynomial(_PAIR_G, 5, cx.field))
    ok += gcurves.verify_leadterm_claim(*fixed)
    return ok


def _union_gin_degree(cx: _Context) -> bool:
    f = parse_polynomial(_PAIR_F, 5, cx.field)
    g = parse_polynomial(_PAIR_G, 5, cx.field)
    return gcurves.union_gin(f, g, seed=cx.cfg.seed).max_generator_degree <= 5


def _restriction(cx: _Context) -> bool:
    if not restriction_saturation_check(cx.quartic_polys, cx.cfg.seed, cap=4).equal:
        return False
    rng = cx.rng(5)
    for k in range(cx.cfg.restriction_curves):
        polys = gcurves.curve_ideal_from_param(gcurves.random_param(10, rng, p=cx.cfg.p), 5, cx.cfg.p)
        if not restriction_saturation_check(polys, cx.cfg.seed + k, cap=6).equal:
            return False
    return True


def _macaulay(cx: _Context) -> bool:
    f = parse_polynomial(_PAIR_F, 5, cx.field)
    g = parse_polynomial(_PAIR_G, 5, cx.field)
    union = gcurves.union_quintics_ideal(f, g, verify=False)
    return macaulay_agreement(cx.quartic_polys, 8) and macaulay_agreement(union, 8)


def _generic_curves(cx: _Context) -> int:
    rng = cx.rng(11)
    good = 0
    for k in range(cx.cfg.curves):
        forms = gcurves.random_param(10, rng, p=cx.cfg.p)
        J, _ = gcurves.curve_gin(forms, cap=7, seed=cx.cfg.seed + k, trials=1, p=cx.cfg.p)
        good += regularity_borel(J) <= 6 and sheaf_h1_oracle(J, 5).value == 0
    return good


@dataclass(frozen=True)
class Claim:
    id: str
    compute: Callable[[_Context], Any]
    expected: Callable[[VerifyConfig], Any]


def _const(v):
    return lambda cfg: v


CLAIMS: list[Claim] = [
    Claim("five-hyperplane-gins",
          lambda cx: sorted(map(str, hyperplane_gins("p3", 10, 4))),
          _const(_case_ideal_strings(["1", "2", "3", "4a", "4b"]))),
    Claim("planar-hyperplane-gins",
          lambda cx: sorted(map(str, hyperplane_gins("planar", 10, 5))),
          _const(_case_ideal_strings(["planar1", "planar2"]))),
    Claim("planar-gins-need-gap-condition", _planar_without_gap, _const(True)),
    Claim("lambda-reachable-equals-staircases", _lambda_vs_staircases, _const(True)),
    Claim("nonleaf-count-equals-colength", _nonleaf_vs_colength, _const(True)),
    Claim("staircase-counts-nondegenerate", lambda cx: _staircase_counts(3), _const([1, 1, 2, 3, 4, 6, 9, 12, 17, 24])),
    Claim("staircase-counts-planar", lambda cx: _staircase_counts(2), _const([1, 1, 2, 2, 3, 4, 5, 6, 8, 10])),
    Claim("eight-nonleaf-vertices",
          lambda cx: nonleaf_count(tree_from_ideal(
              borel_closure([(0, 0, 3)], 3) + ideal("x0*x1", "x0^2", arity=3))),
          _const(8)),
    Claim("excluded-ideal-not-4-regular",
          lambda cx: regularity_borel(borel_closure([(1, 1, 0), (0, 1, 2), (0, 0, 5)], 3)),
          _const(5)),
    *[Claim(f"cone-genus-{c}", (lambda c: lambda cx: genus_of_cone(CASE_GINS[c][0]))(c), _const(v))
      for c, v in (("1", 6), ("2", 7), ("3", 8), ("4a", 9), ("4b", 9), ("planar1", 11), ("planar2", 12))],
    Claim("case1-genus0-max-i", lambda cx: cx.max_i("1", 0), _const(1)),
    Claim("case2-genus1-max-i", lambda cx: cx.max_i("2", 1), _const(3)),
    Claim("case2-genus2-max-i", lambda cx: cx.max_i("2", 2), _const(2)),
    Claim("case3-max-i", lambda cx: max(i for _, i in cx.table("3") if i is not None), _const(3)),
    Claim("case4-max-i-at-most-5",
          lambda cx: all(i is None or i <= 5 for c in ("4a", "4b") for g, i in cx.table(c) if g <= 7),
          _const(True)),
    Claim("planar1-g-plus-i-at-most-10", lambda cx: _planar_g_plus_i(cx, "planar1") <= 10, _const(True)),
    Claim("planar2-g-plus-i-at-most-12", lambda cx: _planar_g_plus_i(cx, "planar2") <= 12, _const(True)),
    Claim("g-plus-i-bound", _g_plus_i_ok, _const(True)),
    Claim("figure6-witness-i", lambda cx: reachable_with_i(cx.ctx("1", 0)).get(FIG6), _const(1)),
    Claim("figure7-witness-i", lambda cx: reachable_with_i(cx.ctx("2", 1)).get(FIG7), _const(3)),
    Claim("quintic-piece-identity", _all_reachable_consistent, _const(True)),
    Claim("random-trace-genus-drop", _random_trace_drop, _const(True)),
    Claim("random-trace-h1-count", _random_trace_h1, _const(True)),
    Claim("planar-step-threshold", _planar_threshold, _const(7)),
    Claim("scroll-genus9-roots", lambda cx: sorted(solve_scroll_quadratic(9)), _const([3, 4])),
    Claim("scroll-genus8-roots", lambda cx: sorted(solve_scroll_quadratic(8)), _const([])),
    Claim("no-genus8-degree10-class", _no_genus8, _const(True)),
    Claim("chi-integral-on-window", _chi_integral, _const(True)),
    Claim("chi-displayed-values", _chi_displayed, _const(["33", "57/2", "4", "23", "40"])),
    Claim("s03-genus-formula", lambda cx: str(adjunction_genus(DivisorClass(3, 10), F3)), _const("7")),
    Claim("s03-vertex-proper-transform", _vertex_transforms, _const([[3, 7]])),
    Claim("proper-transform-chi-parity", lambda cx: str(riemann_roch_chi(DivisorClass(1, 10), F3)),
          _const("non-integer")),
    Claim("splitting-unique-codim4",
          lambda cx: [list(t) for t, c in enumerate_splittings(10, 4) if c == 4],
          _const([[4, 3, 2, 1]])),
    Claim("splitting-balanced", lambda cx: splitting_codim((3, 3, 2, 2)), _const(0)),
    Claim("splitting-enumeration-10x4", lambda cx: len(enumerate_splittings(10, 4)), _const(68)),
    Claim("splitting-special-floor",
          lambda cx: [[list(t), c] for t, c in special_below(enumerate_splittings(10, 4), 4)],
          _const([])),
    Claim("twist-vanishing",
          lambda cx: [twist_vanishing_check(10, 9, 5), *twist_vanishing_extremes(10, 9, 5)],
          _const([True, 42, 8])),
    Claim("ci-genus-223", lambda cx: list(ci_genus((2, 2, 3), 4)), _const([12, 13])),
    Claim("residual-genus", lambda cx: str(linkage_genus(8, 10, 2, (2, 2, 3))), _const("16")),
    Claim("reducible-chi-caps", lambda cx: list(reducible_chi_bounds(5, 5, 1).caps), _const([50, 44, 38])),
    Claim("quartic-gin", lambda cx: _quartic_gin(cx, "buchberger"), _const([str(QUARTIC_GIN), True])),
    Claim("quartic-gin-linear-route", lambda cx: _quartic_gin(cx, "linear"), _const([str(QUARTIC_GIN), True])),
    Claim("union-leadterm-claim", _union_pairs, lambda cfg: cfg.pairs + 1),
    Claim("union-gin-max-degree", _union_gin_degree, _const(True)),
    Claim("restriction-saturation", _restriction, _const(True)),
    Claim("macaulay-agreement", _macaulay, _const(True)),
    Claim("generic-curve-6-regular", _generic_curves, lambda cfg: cfg.curves),
]

CLAIM_IDS = tuple(c.id for c in CLAIMS)


def witness_ideals() -> dict[str, MonomialIdeal]:
    return {"quartic-gin": QUARTIC_GIN, "figure6-witness": FIG6, "figure7-witness": FIG7}


def verify_paper(config: VerifyConfig | None = None) -> Report:
    """Run every registered claim (or ``config.only``) in id order."""
    cfg = config or VerifyConfig()
    unknown = set(cfg.only) - set(CLAIM_IDS)
    if unknown:
        raise ValueError(f"unknown claim ids: {sorted(unknown)}")
    cx = _Context(cfg)
    records = []
    for claim in sorted(CLAIMS, key=lambda c: c.id):
        if cfg.only and claim.id not in cfg.only:
            continue
        expected = _plain(claim.expected(cfg))
        t0 = time.perf_counter()
        try:
            computed = _plain(claim.compute(cx))
        except Exception as exc:  # reported per claim, never fatal
            computed = f"error: {type(exc).__name__}: {exc}"
        ms = int((time.perf_counter() - t0) * 1000) if cfg.timings else 0
        loc, quote = ANCHORS[claim.id]
        records.append(ClaimRecord(claim.id, Anchor(loc, quote), computed, expected,
                                   status_for(claim.id, computed, expected), ms))
    witnesses = {k: v.to_text() for k, v in witness_ideals().items()}
    return Report(records, cfg.echo(), summarize(records), witnesses)


def exit_code(report: Report) -> int:
    return 1 if report.summary.get("mismatch", 0) else 0


# ---------------------------------------------------------------------------
# emission


def to_structured(report: Report) -> str:
    doc = {
        "config": report.config,
        "summary": report.summary,
        "claims": [asdict(c) for c in report.claims],
        "witnesses": report.witnesses,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def from_structured(text: str) -> Report:
    doc = json.loads(text)
    claims = [ClaimRecord(c["id"], Anchor(**c["anchor"]), c["computed"], c["expected"], c["status"], c["runtime_ms"])
              for c in doc["claims"]]
    return Report(claims, doc["config"], doc["summary"], doc.get("witnesses", {}))


def _short(v, width: int = 48) -> str:
    s = json.dumps(v)
    return s if len(s) <= width else s[: width - 3] + "..."


def to_text(report: Report) -> str:
    cfg = report.config
    head = f"# p={cfg.get('p')} seed={cfg.get('seed')} reg_caps={json.dumps(cfg.get('reg_caps'), sort_keys=True)}"
    rows = [head, f"{'status':<24} {'claim':<36} {'computed':<50} expected"]
    for c in report.claims:
        line = f"{c.status:<24} {c.id:<36} {_short(c.computed):<50} {_short(c.expected)}"
        if cfg.get("timings"):
            line += f"  [{c.runtime_ms} ms]"
        rows.append(line)
    s = report.summary
    rows.append(f"# {s.get('total', 0)} claims: {s.get('match', 0)} match, {s.get('mismatch', 0)} mismatch, "
                f"{s.get('documented-discrepancy', 0)} documented discrepancies")
    return "\n".join(rows) + "\n"


def dot_bundle(report: Report) -> dict[str, str]:
    return {f"{name}.dot": to_dot(tree_from_ideal(read_ideal(text)), name.replace("-", "_"))
            for name, text in sorted(report.witnesses.items())}


def emit(report: Report, fmt: str, out: Path | str | None = None) -> list[Path] | str:
    """Render a report.

    ``text`` and ``structured`` return the document when ``out`` is None and
    otherwise write it into the directory ``out``; ``dot-bundle`` always
    writes one DOT file per witness into ``out``.
    """
    if fmt == "text":
        doc, name = to_text(report), "report.txt"
    elif fmt == "structured":
        doc, name = to_structured(report), "report.json"
    elif fmt == "dot-bundle":
        if out is None:
            raise ValueError("dot-bundle needs an output directory")
        out = Path(out)
        out.mkdir(parents=True, exist_ok=True)
        paths = []
        for fname, text in dot_bundle(report).items():
            (out / fname).write_text(text)
            paths.append(out / fname)
        return paths
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if out is None:
        return doc
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    (out / name).write_text(doc)
    return [out / name]
