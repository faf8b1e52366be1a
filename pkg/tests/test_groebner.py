from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gincalc.groebner import curves as gcurves
from gincalc.groebner.buchberger import buchberger, initial_ideal, is_groebner, normal_form
from gincalc.groebner.field import GF, QQ, PrimeField
from gincalc.groebner.gin import (
    LinearChange,
    gin_estimate,
    graded_dims,
    initial_ideal_linear,
    macaulay_agreement,
    restriction_saturation_check,
)
from gincalc.groebner.linalg import matmul_mod, nullspace, rref, rref_simple, sym_power
from gincalc.groebner.poly import Polynomial, parse_polynomial, read_polynomials
from gincalc.monomials import graded_piece_dim, ideal, is_borel_fixed

P = GF.p
QUARTIC_GIN = ideal("x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2", "x2^2", arity=5)


def test_prime_field():
    F = PrimeField(7)
    assert F.norm(-1) == 6 and F.inv(3) == 5
    with pytest.raises(ValueError):
        PrimeField(9)
    with pytest.raises(ZeroDivisionError):
        F.inv(14)


def test_parse_and_arithmetic():
    f = parse_polynomial("x0^2 - 3*x0*x1 + 1/2*x1^2", 2, QQ)
    g = parse_polynomial("x0 + x1", 2, QQ)
    h = f * g
    assert h.degree == 3 and h.homogeneous
    assert (h - f * g).is_zero()
    assert f.leading_monomial() == (2, 0)
    polys, n = read_polynomials("vars: 3\nx0*x2 - x1^2  # conic\n")
    assert n == 3 and polys[0].leading_monomial() == (0, 2, 0)


@settings(max_examples=8, deadline=None)
@given(st.integers(120, 200), st.integers(170, 240), st.integers(1, 200), st.integers(0, 2 ** 32 - 1))
def test_blocked_rref_matches_simple(rows, cols, rank, seed):
    rng = np.random.default_rng(seed)
    # low rank exercises blocks without pivots
    k = min(rank, rows, cols)
    M = matmul_mod(rng.integers(0, P, (rows, k)), rng.integers(0, P, (k, cols)), P)
    R1, p1 = rref(M, P, block=16)
    R2, p2 = rref_simple(M, P)
    assert p1 == p2 and len(p1) == k and np.array_equal(R1, R2)


def test_blocked_rref_on_a_large_matrix():
    rng = np.random.default_rng(3)
    M = matmul_mod(rng.integers(0, P, (180, 90)), rng.integers(0, P, (90, 240)), P)
    R1, p1 = rref(M, P)
    R2, p2 = rref_simple(M, P)
    assert p1 == p2 and len(p1) == 90 and np.array_equal(R1, R2)


def test_nullspace():
    rng = np.random.default_rng(0)
    M = rng.integers(0, P, (5, 9))
    K = nullspace(M, P)
    assert K.shape == (4, 9)
    assert not matmul_mod(M, K.T, P).any()


def test_sym_power_is_multiplicative():
    rng = np.random.default_rng(1)
    A, B = rng.integers(0, P, (3, 3)), rng.integers(0, P, (3, 3))
    lhs = sym_power(matmul_mod(A, B, P), 3, P)
    # f(ABx) = (f o A)(Bx)
    rhs = matmul_mod(sym_power(A, 3, P), sym_power(B, 3, P), P)
    assert np.array_equal(lhs, rhs)


def _twisted_cubic(field=GF):
    return [parse_polynomial(s, 4, field) for s in ("x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2")]


@pytest.mark.parametrize("field", [GF, QQ])
def test_buchberger_twisted_cubic(field):
    B = buchberger(_twisted_cubic(field))
    assert is_groebner(B)
    assert initial_ideal(B) == ideal("x1^2", "x1*x2", "x2^2", arity=4)
    f1, _, f3 = _twisted_cubic(field)
    member = parse_polynomial("x3", 4, field) * f1 + parse_polynomial("x0", 4, field) * f3
    assert not normal_form(member, B.elements)
    assert normal_form(parse_polynomial("x1*x3", 4, field), B.elements)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_buchberger_random_quadrics(seed):
    rng = np.random.default_rng(seed)
    gens = []
    mons = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
    for _ in range(2):
        gens.append(Polynomial({m: int(rng.integers(0, P)) for m in mons}, 3))
    gens = [g for g in gens if g]
    if not gens or not all(g.homogeneous for g in gens):
        return
    B = buchberger(gens, degree_cap=6)
    assert is_groebner(B)
    J = initial_ideal(B)
    dims = graded_dims(gens, 6)
    assert all(dims[t] == graded_piece_dim(J, t) for t in range(7))


def test_buchberger_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        buchberger([parse_polynomial("x0^2 + x1", 2)])


def test_two_routes_agree_after_a_change():
    polys = _twisted_cubic()
    A = LinearChange.random(4, np.random.default_rng(7))
    lin = initial_ideal_linear(polys, 5, A)
    bb = initial_ideal(buchberger(A.apply(polys), 5))
    assert lin == bb and is_borel_fixed(lin)


def test_singular_change_rejected():
    with pytest.raises(ValueError):
        LinearChange(np.zeros((3, 3), dtype=np.int64))


def test_quartic_gin_and_restriction():
    polys = gcurves.curve_ideal_from_param(gcurves.rational_normal_curve(4), 2)
    assert len(polys) == 6
    assert gcurves.kernel_dims(gcurves.rational_normal_curve(4), 3) == [0, 0, 6, 22]
    est = gin_estimate(polys, trials=3, seed=1, cap=4)
    assert est.ideal == QUARTIC_GIN and est.stable
    assert gin_estimate(polys, trials=2, seed=1, cap=4, method="linear").ideal == QUARTIC_GIN
    assert restriction_saturation_check(polys, seed=2, cap=4).equal
    assert macaulay_agreement(polys, 6)
    with pytest.raises(ValueError):
        gin_estimate(polys, trials=1)


def test_curve_gin_of_random_degree10_curve():
    rng = np.random.default_rng(8)
    forms = gcurves.random_param(10, rng)
    J, stable = gcurves.curve_gin(forms, cap=6, seed=0, trials=2)
    assert stable and is_borel_fixed(J) and J.max_degree <= 4


def test_common_factor_detected():
    forms = [[1, 1, 0], [0, 1, 1], [2, 2, 0], [0, 3, 3], [1, 2, 1]]  # all divisible by s + u
    assert gcurves.has_common_factor(forms)
    with pytest.raises(gcurves.CommonFactor):
        gcurves.curve_ideal_from_param(forms, 2)


def test_union_of_quintics():
    f = parse_polynomial("x0^5 + x1^5 + x0*x2^4", 5)
    g = parse_polynomial("x3^5 + x4^5 + x2^4*x3", 5)
    gens = gcurves.union_quintics_ideal(f, g)
    assert len(gens) == 6
    assert gcurves.verify_leadterm_claim(f, g)
    assert gcurves.verify_leadterm_claim(parse_polynomial("x0^5", 5), parse_polynomial("x3^5", 5))
    with pytest.raises(gcurves.Inadmissible):
        gcurves.union_quintics_ideal(parse_polynomial("x2^5 + x0^5", 5), g)
    with pytest.raises(gcurves.Inadmissible):
        gcurves.union_quintics_ideal(parse_polynomial("x3^5", 5), g)
    U = gcurves.union_gin(f, g, seed=0)
    assert U.max_generator_degree == 5
