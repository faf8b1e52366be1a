"""Buchberger's algorithm under graded revlex with the normal selection strategy."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from gincalc.groebner.poly import Polynomial
from gincalc.monomials import MonomialIdeal, divides, revlex_key


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _quot(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


@dataclass
class GroebnerBasis:
    elements: list
    degree_cap: int | None = None
    leads: list = field(default_factory=list)

    def __post_init__(self):
        if not self.leads:
            self.leads = [g.leading_monomial() for g in self.elements]


def normal_form(f: Polynomial, G: list[Polynomial], leads: list[tuple] | None = None, full: bool = True) -> Polynomial:
    """Remainder of ``f`` modulo ``G`` (tail-reduced when ``full``)."""
    leads = leads if leads is not None else [g.leading_monomial() for g in G]
    inv = [f.field.inv(g.terms[lm]) for g, lm in zip(G, leads)]
    norm = f.field.norm
    work = dict(f.terms)
    rem: dict = {}
    while work:
        m = max(work, key=revlex_key)
        c = work[m]
        for g, lm, gi in zip(G, leads, inv):
            if divides(lm, m):
                q = _quot(m, lm)
                factor = norm(c * gi)
                for gm, gc in g.terms.items():
                    mm = tuple(a + b for a, b in zip(gm, q))
                    v = norm(work.get(mm, 0) - factor * gc)
                    if v:
                        work[mm] = v
                    else:
                        work.pop(mm, None)
                break
        else:
            if not full:
                rem.update(work)
                break
            rem[m] = c
            del work[m]
    return f._wrap(rem)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    L = _lcm(lf, lg)
    a = f.shift(_quot(L, lf), f.field.inv(f.terms[lf]))
    b = g.shift(_quot(L, lg), g.field.inv(g.terms[lg]))
    return a - b


def buchberger(gens: list[Polynomial], degree_cap: int | None = None, reduce: bool = True) -> GroebnerBasis:
    """Groebner basis of homogeneous ``gens``, complete up to ``degree_cap``.

    Pairs are taken lowest lcm degree first, then revlex-smallest lcm.
    Buchberger's coprime and chain criteria discard useless pairs.
    """
    gens = [g for g in gens if g]
    if not gens:
        return GroebnerBasis([], degree_cap)
    arity = gens[0].arity
    if any(g.arity != arity for g in gens):
        raise ValueError("generators of different arity")
    if not all(g.homogeneous for g in gens):
        raise ValueError("buchberger expects homogeneous generators")

    G: list[Polynomial] = []
    leads: list[tuple] = []
    pairs: list = []
    done: set = set()
    counter = 0

    def add(h: Polynomial):
        nonlocal counter
        h = h.monic()
        k = len(G)
        G.append(h)
        leads.append(h.leading_monomial())
        for i in range(k):
            L = _lcm(leads[i], leads[k])
            if degree_cap is not None and sum(L) > degree_cap:
                continue
            heapq.heappush(pairs, (sum(L), revlex_key(L), counter, i, k))
            counter += 1

    for g in sorted(gens, key=lambda p: p.degree):
        r = normal_form(g, G, leads) if G else g
        if r:
            add(r)

    while pairs:
        _, _, _, i, j = heapq.heappop(pairs)
        done.add((i, j))
        li, lj = leads[i], leads[j]
        L = _lcm(li, lj)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue  # coprime leading terms
        if any(
            k not in (i, j)
            and divides(leads[k], L)
            and (min(i, k), max(i, k)) in done
            and (min(j, k), max(j, k)) in done
            for k in range(len(G))
        ):
            continue
        r = normal_form(s_polynomial(G[i], G[j]), G, leads)
        if r:
            add(r)

    B = GroebnerBasis(G, degree_cap, list(leads))
    return reduce_basis(B) if reduce else B


def reduce_basis(B: GroebnerBasis) -> GroebnerBasis:
    """Minimal, tail-reduced basis."""
    keep = []
    for k, lm in enumerate(B.leads):
        if not any(j != k and divides(B.leads[j], lm) and (B.leads[j] != lm or j < k) for j in range(len(B.leads))):
            keep.append(k)
    G = [B.elements[k] for k in keep]
    out = []
    for k, g in enumerate(G):
        others = G[:k] + G[k + 1:]
        out.append(normal_form(g, others).monic() if others else g)
    return GroebnerBasis(out, B.degree_cap)


def initial_ideal(B: GroebnerBasis) -> MonomialIdeal:
    if not B.elements:
        raise ValueError("empty basis")
    return MonomialIdeal(tuple(B.leads), B.elements[0].arity)


def is_groebner(B: GroebnerBasis) -> bool:
    """Every S-pair within the cap reduces to zero."""
    G, leads = B.elements, B.leads
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            L = _lcm(leads[i], leads[j])
            if B.degree_cap is not None and sum(L) > B.degree_cap:
                continue
            if normal_form(s_polynomial(G[i], G[j]), G, leads):
                return False
    return True
