from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gincalc.monomials import (
    ArityMismatch,
    DimensionError,
    MonomialIdeal,
    NotBorelFixed,
    borel_closure,
    colength,
    divides,
    format_monomial,
    from_labels,
    hilbert_function,
    hilbert_function_bruteforce,
    hilbert_polynomial_curve,
    ideal,
    is_borel_fixed,
    is_borel_fixed_bruteforce,
    is_saturated_borel,
    label_sequence,
    monomials_of_degree,
    parse_monomial,
    read_ideal,
    regularity_borel,
    revlex_key,
    revlex_less,
    saturate_wrt,
    sheaf_h1_oracle,
)
from strategies import borel_ideals, monomials


def test_revlex_small_cases():
    # x1^2 > x0*x2 in revlex, unlike lex
    assert revlex_less((1, 0, 1), (0, 2, 0))
    assert revlex_less((0, 0, 2), (1, 0, 1))
    assert not revlex_less((1, 1, 0), (1, 1, 0))
    with pytest.raises(ArityMismatch):
        revlex_less((1, 0), (1, 0, 0))


@given(monomials(4), monomials(4), monomials(4))
def test_revlex_is_a_multiplicative_total_order(a, b, c):
    assert (revlex_key(a) < revlex_key(b)) or (revlex_key(b) < revlex_key(a)) or a == b
    if revlex_less(a, b):
        ac = tuple(x + y for x, y in zip(a, c))
        bc = tuple(x + y for x, y in zip(b, c))
        assert revlex_less(ac, bc)


def test_monomials_of_degree_descend():
    mons = monomials_of_degree(3, 3)
    assert len(mons) == 10
    assert mons[0] == (3, 0, 0) and mons[-1] == (0, 0, 3)
    assert all(revlex_less(b, a) for a, b in zip(mons, mons[1:]))


@given(monomials(5, 6))
def test_labels_and_text_round_trip(m):
    assert from_labels(label_sequence(m), 5) == m
    assert parse_monomial(format_monomial(m), 5) == m


def test_parse_forms():
    assert parse_monomial("x0^2*x1", 3) == (2, 1, 0)
    assert parse_monomial("1", 3) == (0, 0, 0)
    assert parse_monomial("0 2 1", 3) == (0, 2, 1)
    with pytest.raises(ArityMismatch):
        parse_monomial("x3", 3)
    with pytest.raises(ValueError):
        parse_monomial("y2", 3)


def test_ideal_is_minimalized():
    I = ideal("x0^2", "x0^3", "x0^2*x1", "x1", arity=2)
    assert set(I.gens) == {(0, 1), (2, 0)}
    assert (3, 4) in I and (1, 0) not in I


def test_read_ideal_format():
    text = "# comment\nvars: 3\nx0^2\nx0*x1  # trailing\n\nx1^2\n"
    I = read_ideal(text)
    assert I == ideal("x0^2", "x0*x1", "x1^2", arity=3)
    assert read_ideal(I.to_text()) == I
    with pytest.raises(ValueError):
        read_ideal("x0\n")


@settings(max_examples=60)
@given(st.lists(monomials(4), min_size=1, max_size=3))
def test_borel_closure_is_borel_and_idempotent(gens):
    B = borel_closure(gens, 4)
    assert is_borel_fixed(B) and is_borel_fixed_bruteforce(B)
    assert borel_closure(B.gens, 4) == B
    assert all(m in B for m in gens)


@settings(max_examples=60)
@given(st.lists(monomials(3), min_size=1, max_size=4))
def test_borel_checks_agree(gens):
    I = MonomialIdeal(tuple(gens), 3)
    assert is_borel_fixed(I) == is_borel_fixed_bruteforce(I)


@settings(max_examples=40)
@given(borel_ideals(4, 4), st.integers(0, 7))
def test_hilbert_function_matches_bruteforce(I, t):
    assert hilbert_function(I, t) == hilbert_function_bruteforce(I, t)


@settings(max_examples=40)
@given(borel_ideals(4, 4))
def test_saturation_criterion(I):
    S = saturate_wrt(I, 3)
    assert is_saturated_borel(S)
    assert all(g in S for g in I.gens)


def test_saturation_rejects_non_borel():
    with pytest.raises(NotBorelFixed):
        is_saturated_borel(ideal("x1", arity=3))


def test_regularity_and_colength():
    I = borel_closure([(0, 0, 3, 0)], 4)
    assert regularity_borel(I) == 3
    assert colength(I) == 10
    assert colength(ideal("x0", "x1", "x2^2", arity=4)) == 2


def test_curve_hilbert_polynomial_and_h1():
    # cone over the gin of ten points in P^3
    I = borel_closure([(0, 0, 3, 0, 0)], 5)
    assert hilbert_polynomial_curve(I) == (10, 6)
    assert sheaf_h1_oracle(I, 5).value == 0
    with pytest.raises(DimensionError):
        hilbert_polynomial_curve(ideal("x0", "x1", "x2^2", arity=4))


def test_extend_and_restrict_are_inverse():
    I = ideal("x0^2", "x0*x1", "x1^3", arity=3)
    assert I.extend().restrict() == I
    assert divides((1, 0, 0), (2, 0, 0))
