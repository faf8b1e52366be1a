"""Ideals of parameterized rational curves and unions of plane quintics.

A binary form of degree ``d`` is a coefficient vector ``c`` with
``F(s, u) = sum_k c[k] s^(d-k) u^k``.  The substitution map from degree-t
forms in five variables to degree ``d*t`` binary forms is computed by
evaluation at ``d*t + 1`` affine points, which is injective on its target.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from gincalc.groebner.buchberger import buchberger, initial_ideal, normal_form
from gincalc.groebner.field import GF, PrimeField
from gincalc.groebner.gin import LinearChange, DEFAULT_CAP, initial_ideal_linear
from gincalc.groebner.linalg import nullspace, rref
from gincalc.groebner.poly import Polynomial
from gincalc.monomials import MonomialIdeal, monomials_of_degree, parse_monomial


class CommonFactor(ValueError):
    pass


def _trim(c: list[int]) -> list[int]:
    while c and c[0] == 0:
        c = c[1:]
    return c


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    inv = pow(b[0], -1, p)
    while len(a) >= len(b):
        q = a[0] * inv % p
        for k in range(len(b)):
            a[k] = (a[k] - q * b[k]) % p
        a = _trim(a)
        if not a:
            break
    return a


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim([x % p for x in a]), _trim([x % p for x in b])
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def has_common_factor(forms: list, p: int = GF.p) -> bool:
    """Binary forms share a factor iff all drop ``s^d`` (common ``u``) or
    their dehomogenizations at ``u = 1`` share a root factor."""
    forms = [[int(x) % p for x in f] for f in forms]
    if all(f[0] == 0 for f in forms):
        return True
    g: list[int] = []
    for f in forms:
        g = _poly_gcd(g, f, p) if g else _trim(f)
    return len(g) > 1


def evaluation_matrix(forms: list, t: int, p: int, points: int | None = None) -> np.ndarray:
    """Rows: degree-``t`` monomials (revlex descending); columns: values at points."""
    forms = np.array(forms, dtype=np.int64) % p
    n, d1 = forms.shape
    d = d1 - 1
    N = points or d * t + 1
    if N > p:
        raise ValueError("field too small for the evaluation points")
    pts = np.arange(N, dtype=np.int64)
    powers = np.ones((d1, N), dtype=np.int64)
    for k in range(1, d1):
        powers[k] = powers[k - 1] * pts % p
    # value of sum_k c_k s^(d-k) at s = pt
    vals = np.zeros((n, N), dtype=np.int64)
    for k in range(d1):
        vals = (vals + np.outer(forms[:, k], powers[d - k])) % p
    mons = monomials_of_degree(n, t)
    M = np.ones((len(mons), N), dtype=np.int64)
    for r, m in enumerate(mons):
        for i, e in enumerate(m):
            for _ in range(e):
                M[r] = M[r] * vals[i] % p
    return M


def curve_ideal_from_param(forms: list, degree_cap: int = DEFAULT_CAP, p: int = GF.p) -> list[Polynomial]:
    """Kernel bases of the substitution map in every degree up to the cap."""
    if has_common_factor(forms, p):
        raise CommonFactor("forms share a common factor")
    n = len(forms)
    fld = PrimeField(p)
    out = []
    for t in range(1, degree_cap + 1):
        M = evaluation_matrix(forms, t, p)
        K = nullspace(M.T, p)
        mons = monomials_of_degree(n, t)
        for row in K:
            nz = np.flatnonzero(row)
            out.append(Polynomial({mons[k]: int(row[k]) for k in nz}, n, fld))
    return out


def kernel_dims(forms: list, degree_cap: int, p: int = GF.p) -> list[int]:
    out = []
    for t in range(degree_cap + 1):
        M = evaluation_matrix(forms, t, p)
        out.append(M.shape[0] - len(rref(M.T, p)[1]))
    return out


def curve_initial_ideal(forms: list, cap: int = DEFAULT_CAP, change: LinearChange | None = None,
                        p: int = GF.p) -> MonomialIdeal:
    """Initial ideal of the curve's ideal, truncated at ``cap``.

    Scanning degree-t monomials from smallest to largest, a monomial is a
    leading term iff its image depends on the images of smaller ones, i.e.
    iff it is not a pivot column of the echelon form.
    """
    forms = np.array(forms, dtype=np.int64) % p
    if change is not None:
        forms = change.matrix @ forms % p
    n = forms.shape[0]
    lead = []
    for t in range(1, cap + 1):
        M = evaluation_matrix(forms, t, p)[::-1]  # ascending revlex
        _, piv = rref(M.T, p)
        mons = monomials_of_degree(n, t)[::-1]
        std = set(piv)
        lead += [m for k, m in enumerate(mons) if k not in std]
    return MonomialIdeal(tuple(lead), n)


def curve_gin(forms: list, cap: int = DEFAULT_CAP, seed: int = 0, trials: int = 2, p: int = GF.p):
    """Gin of a parameterized curve by the evaluation route; (ideal, stable)."""
    streams = np.random.SeedSequence(seed).spawn(trials)
    got = [curve_initial_ideal(forms, cap, LinearChange.random(len(forms), np.random.default_rng(s), p), p)
           for s in streams]
    return got[0], len(set(got)) == 1


def random_param(d: int, rng: np.random.Generator, n: int = 5, p: int = GF.p) -> list[list[int]]:
    while True:
        forms = rng.integers(0, p, size=(n, d + 1), dtype=np.int64).tolist()
        if not has_common_factor(forms, p):
            return forms


def read_param(text: str) -> list[list[int]]:
    """Five lines, each with the ``d + 1`` coefficients of one binary form."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append([int(x) for x in line.replace(",", " ").split()])
    if len({len(r) for r in rows}) != 1:
        raise ValueError("all forms must have the same degree")
    return rows


def rational_normal_curve(d: int) -> list[list[int]]:
    return [[1 if k == i else 0 for k in range(d + 1)] for i in range(d + 1)]


# ---------------------------------------------------------------------------
# unions of plane quintics


X2_5 = (0, 0, 5, 0, 0)


class Inadmissible(ValueError):
    pass


def _check_quintic(f: Polynomial, allowed: set[int]):
    if any(sum(m) != 5 for m in f.terms):
        raise Inadmissible("quintic expected")
    if any(e and i not in allowed for m in f.terms for i, e in enumerate(m)):
        raise Inadmissible(f"{f} uses variables outside {sorted(allowed)}")
    if X2_5 in f.terms:
        raise Inadmissible("the x2^5 term must be absent")


def union_quintics_ideal(f: Polynomial, g: Polynomial, verify: bool = True) -> list[Polynomial]:
    """Generators of the union of the planes curves ``f = x3 = x4 = 0`` and
    ``g = x0 = x1 = 0``, which meet at the point where only ``x2`` survives."""
    _check_quintic(f, {0, 1, 2})
    _check_quintic(g, {2, 3, 4})
    fld = f.field
    mons = ["x1*x4", "x0*x4", "x1*x3", "x0*x3"]
    gens = [Polynomial.monomial(parse_monomial(m, 5), fld) for m in mons] + [f, g]
    if verify:
        var = lambda i: Polynomial.monomial(tuple(int(k == i) for k in range(5)), fld)  # noqa: E731
        for comp in ([var(3), var(4), f], [var(0), var(1), g]):
            B = buchberger(comp)
            if any(normal_form(h, B.elements, B.leads) for h in gens):
                raise AssertionError("generator outside a component ideal")
    return gens


def verify_leadterm_claim(f: Polynomial, g: Polynomial) -> bool:
    """Initial ideal of the union is generated by the six visible leading terms."""
    gens = union_quintics_ideal(f, g, verify=False)
    J = initial_ideal(buchberger(gens))
    expected = MonomialIdeal(tuple(h.leading_monomial() for h in gens), 5)
    return J == expected and J.max_degree <= 5


def random_admissible_quintic(variables: tuple[int, int, int], rng: np.random.Generator, fld: PrimeField = GF) -> Polynomial:
    terms = {}
    for m in monomials_of_degree(3, 5):
        full = [0] * 5
        for v, e in zip(variables, m):
            full[v] = e
        full = tuple(full)
        if full != X2_5:
            terms[full] = int(rng.integers(1, fld.p))
    return Polynomial(terms, 5, fld)


@dataclass
class UnionGin:
    ideal: MonomialIdeal
    max_generator_degree: int


def union_gin(f: Polynomial, g: Polynomial, seed: int = 0, cap: int = DEFAULT_CAP) -> UnionGin:
    """Gin of a union of plane quintics in generic coordinates (linear route)."""
    gens = union_quintics_ideal(f, g, verify=False)
    rng = np.random.default_rng(seed)
    J = initial_ideal_linear(gens, cap, LinearChange.random(5, rng, f.field.p), f.field.p)
    return UnionGin(J, J.max_degree)
