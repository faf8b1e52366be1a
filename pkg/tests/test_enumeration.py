from __future__ import annotations

import pytest

from gincalc.cohomology import CASE_GINS
from gincalc.enumeration import (
    StaircaseFilter,
    distinct_partitions,
    ellia_peskine_ok,
    enumerate_staircases,
    hyperplane_gins,
    quadratic_generator_count,
    staircase_partition,
)
from gincalc.monomials import colength, hilbert_function_bruteforce, ideal, is_borel_fixed


def test_distinct_partitions():
    assert sorted(distinct_partitions(6)) == [(3, 2, 1), (4, 2), (5, 1), (6,)]


def test_small_colengths():
    assert enumerate_staircases(1, 3) == [ideal("x0", "x1", "x2", arity=4)]
    assert enumerate_staircases(2, 3) == [ideal("x0", "x1", "x2^2", arity=4)]


@pytest.mark.parametrize("cut", [2, 3])
def test_every_staircase_has_its_colength(cut):
    for d in range(1, 9):
        for I in enumerate_staircases(d, cut):
            assert is_borel_fixed(I)
            r = I.max_degree
            # independent count of standard monomials past the regularity
            assert hilbert_function_bruteforce(I, r + 1) == d == colength(I)


def test_five_and_two():
    assert set(hyperplane_gins("p3", 10, 4)) == {CASE_GINS[k][0] for k in ("1", "2", "3", "4a", "4b")}
    assert set(hyperplane_gins("planar", 10, 5)) == {CASE_GINS[k][0] for k in ("planar1", "planar2")}


def test_gap_condition_matters():
    strict = set(hyperplane_gins("planar", 10, 5))
    loose = set(hyperplane_gins("planar", 10, 5, ellia_peskine=False))
    assert strict < loose
    extra = loose - strict
    assert [staircase_partition(I) for I in extra] == [(5, 4, 1)]
    assert not any(ellia_peskine_ok(I) for I in extra)


def test_planar_colength_three():
    got = enumerate_staircases(3, 2, StaircaseFilter(reg_cap=2))
    assert got == [ideal("x0^2", "x0*x1", "x1^2", arity=3)]


def test_quadric_counts():
    counts = sorted(quadratic_generator_count(CASE_GINS[k][0]) for k in ("1", "2", "3", "4a", "4b"))
    assert counts == [0, 1, 2, 3, 3]


def test_bad_input():
    with pytest.raises(ValueError):
        enumerate_staircases(0, 3)
    with pytest.raises(ValueError):
        hyperplane_gins("p5", 10, 4)
