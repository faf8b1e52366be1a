from __future__ import annotations

import pytest
from hypothesis import given, settings

from gincalc.monomials import colength, ideal, is_borel_fixed, saturate_wrt
from gincalc.trees import (
    BorelViolation,
    GenTree,
    RewriteError,
    RewriteStep,
    RewriteTrace,
    Ruleset,
    apply_c_rule,
    apply_lambda,
    c_step,
    c_successors,
    contract_saturation,
    ideal_from_tree,
    lambda_reachable_set,
    nonleaf_count,
    prune,
    replay,
    rewrite_generator,
    to_dot,
    tree_from_ideal,
)
from strategies import borel_ideals

ND, PL = Ruleset.NONDEGENERATE, Ruleset.PLANAR


def test_empty_tree_first_rule():
    T = apply_lambda(GenTree(4), None, ND)
    assert ideal_from_tree(T) == ideal("x0", "x1", "x2", arity=4)
    T = apply_lambda(GenTree(3), None, PL)
    assert ideal_from_tree(T) == ideal("x0", "x1", arity=3)
    with pytest.raises(RewriteError):
        apply_lambda(T, (), PL)


def test_quartic_tree_shape():
    I = ideal("x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2", "x2^2", arity=5)
    T = tree_from_ideal(I)
    assert len(T) == 10 and nonleaf_count(T) == 4
    assert T.children(()) == [(0,), (1,), (2,)]


def test_lambda_rule_needs_borel():
    T = tree_from_ideal(ideal("x0", "x1", arity=3))
    with pytest.raises(BorelViolation):
        apply_lambda(T, (0,), PL)
    assert ideal_from_tree(apply_lambda(T, (1,), PL)) == ideal("x0", "x1^2", arity=3)


def test_c_rule_rejects_root_and_non_leaves():
    T = tree_from_ideal(ideal("x0", "x1", "x2", arity=5))
    with pytest.raises(RewriteError):
        apply_c_rule(T, (), ND)
    with pytest.raises(RewriteError):
        apply_c_rule(T, (3,), ND)


@settings(max_examples=60)
@given(borel_ideals(4, 4))
def test_tree_round_trip(I):
    assert ideal_from_tree(tree_from_ideal(I)) == I


@settings(max_examples=60)
@given(borel_ideals(5, 4))
def test_fast_rewrite_matches_tree_rewrite(I):
    T = tree_from_ideal(I)
    for m in I.gens:
        if max(i for i, e in enumerate(m) if e) > ND.c_top:
            continue
        leaf = tree_from_ideal(type(I)((m,), I.arity)).leaves
        (path,) = leaf
        fast = rewrite_generator(I, m, ND.c_top)
        try:
            slow = ideal_from_tree(apply_c_rule(T, path, ND))
        except BorelViolation:
            slow = None
        assert fast == slow


@settings(max_examples=60)
@given(borel_ideals(4, 4))
def test_contraction_is_saturation(I):
    assert ideal_from_tree(contract_saturation(tree_from_ideal(I))) == saturate_wrt(I, 3)


@settings(max_examples=60)
@given(borel_ideals(4, 4))
def test_prune_enlarges_ideal(I):
    if I.max_degree < 2:
        return  # pruning a depth-one tree leaves only the root
    P = ideal_from_tree(prune(tree_from_ideal(I)))
    assert all(g in P for g in I.gens)


def test_prune_undoes_a_deepest_rewrite():
    T = tree_from_ideal(ideal("x0", "x1", "x2", arity=4))
    T2 = apply_lambda(T, (2,), ND)
    assert prune(T2) == T


def test_reachable_sets_are_borel_of_right_colength():
    for d in range(1, 7):
        for I in lambda_reachable_set(d, ND):
            assert is_borel_fixed(I) and colength(I) == d


def test_trace_replay_and_records():
    start = ideal("x0", "x1", "x2^2", arity=5)
    I1, s1 = c_step(start, (2, 2), ND)
    trace = RewriteTrace(start, (s1,), I1)
    assert replay(trace) == I1
    recs = trace.to_records()
    assert recs[0]["step_degree"] == 2
    assert RewriteStep.from_record(recs[0]) == s1
    bad = RewriteTrace(start, (RewriteStep("C", ND, (2, 2), 3),), I1)
    with pytest.raises(RewriteError):
        replay(bad)


def test_successors_preserve_borel():
    I = ideal("x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2", "x2^2", arity=5)
    succ = list(c_successors(I, ND))
    assert succ and all(is_borel_fixed(J) for J, _ in succ)


def test_dot_output():
    dot = to_dot(tree_from_ideal(ideal("x0", "x1^2", arity=3)), "t")
    assert dot.startswith("digraph t {") and 'label="x1"' in dot
