"""Generator trees of Borel-fixed ideals and the rewriting rules acting on them.

Each minimal generator ``x_{i1} x_{i2} ... x_{ik}`` (``i1 <= ... <= ik``) is a
root-to-leaf path with labels ``i1, ..., ik``.  A vertex is identified with its
label path, so the root is ``()`` and the parent of ``v`` is ``v[:-1]``.

Both rule families rewrite a leaf ``m`` whose greatest variable is ``x_k`` into
``m*x_k, m*x_{k+1}, ..., m*x_top``.  Only the top index differs:

=============  ===========  ===========
ruleset        Lambda top   C top
=============  ===========  ===========
nondegenerate  x_2          x_3
planar         x_1          x_2
=============  ===========  ===========

A rewrite is accepted only when the resulting ideal is Borel-fixed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import comb
from operator import le
from typing import Iterable, Iterator

from gincalc.monomials import (
    MonomialIdeal,
    from_labels,
    is_borel_fixed,
    label_sequence,
    max_variable,
    minimalize,
    times_var,
)


class Ruleset(Enum):
    NONDEGENERATE = "nondegenerate"
    PLANAR = "planar"

    @property
    def lambda_top(self) -> int:
        return 2 if self is Ruleset.NONDEGENERATE else 1

    @property
    def c_top(self) -> int:
        return self.lambda_top + 1

    @property
    def gin_arity(self) -> int:
        """Variables of the hyperplane-section ring (points live in P^{gin_arity-1})."""
        return self.lambda_top + 2

    @property
    def curve_arity(self) -> int:
        return self.gin_arity + 1

    @property
    def twist5_total(self) -> int:
        """Number of quintic monomials in the curve's ambient ring."""
        return comb(5 + self.curve_arity - 1, self.curve_arity - 1)


class RewriteError(ValueError):
    pass


class BorelViolation(RewriteError):
    """The rewrite would produce an ideal that is not Borel-fixed."""


@dataclass(frozen=True)
class GenTree:
    arity: int
    leaves: frozenset = field(default_factory=frozenset)

    @property
    def vertices(self) -> list[tuple]:
        seen = {()}
        for leaf in self.leaves:
            for k in range(1, len(leaf) + 1):
                seen.add(leaf[:k])
        return sorted(seen, key=lambda v: (len(v), v))

    @staticmethod
    def parent(v: tuple) -> tuple:
        if not v:
            raise ValueError("root has no parent")
        return v[:-1]

    @staticmethod
    def label(v: tuple) -> int | None:
        return v[-1] if v else None

    def children(self, v: tuple) -> list[tuple]:
        n = len(v)
        return sorted({w[: n + 1] for w in self.leaves if len(w) > n and w[:n] == v})

    def nonleaf_vertices(self) -> list[tuple]:
        return [v for v in self.vertices if v not in self.leaves]

    def monomial(self, v: tuple) -> tuple:
        return from_labels(v, self.arity)

    def __len__(self) -> int:
        return len(self.vertices)


def tree_from_ideal(I: MonomialIdeal) -> GenTree:
    return GenTree(I.arity, frozenset(label_sequence(g) for g in I.gens))


def ideal_from_tree(T: GenTree) -> MonomialIdeal:
    return MonomialIdeal(tuple(from_labels(v, T.arity) for v in T.leaves), T.arity)


def nonleaf_count(T: GenTree) -> int:
    """Number of non-leaf vertices, root included."""
    return len(T.vertices) - len(T.leaves)


def rewrite_generator(I: MonomialIdeal, m: tuple, top: int) -> MonomialIdeal | None:
    """Replace generator ``m`` by ``m*x_k, ..., m*x_top``; None unless Borel-fixed.

    Only moves that could have relied on ``m`` are re-checked.  When the
    result is Borel-fixed its new generators are automatically minimal.
    """
    k = max_variable(m)
    new = [times_var(m, j) for j in range(max(k, 0), top + 1)]
    old = [g for g in I.gens if g != m]
    gens = old + new

    def member(x):
        return any(all(map(le, g, x)) for g in gens)

    for g in old:
        for j in range(1, len(g)):
            if g[j]:
                moved = g[:j - 1] + (g[j - 1] + 1, g[j] - 1) + g[j + 1:]
                if all(map(le, m, moved)) and not member(moved):
                    return None
    for g in new:
        for j in range(1, len(g)):
            if g[j]:
                moved = g[:j - 1] + (g[j - 1] + 1, g[j] - 1) + g[j + 1:]
                if not member(moved):
                    return None
    return MonomialIdeal.trusted(gens, I.arity)


def _rewrite(T: GenTree, leaf: tuple | None, top: int, check_borel: bool) -> GenTree:
    return _rewrite_with_ideal(T, leaf, top, check_borel)[0]


def _rewrite_with_ideal(T: GenTree, leaf, top: int, check_borel: bool) -> tuple[GenTree, MonomialIdeal]:
    if top >= T.arity:
        raise RewriteError(f"rule needs x_{top}, tree has arity {T.arity}")
    if leaf is None or leaf == ():
        if T.leaves:
            raise RewriteError("the root is only rewritable in the empty tree")
        leaf, start = (), 0
    else:
        leaf = tuple(leaf)
        if leaf not in T.leaves:
            raise RewriteError(f"{leaf} is not a leaf")
        start = leaf[-1]
    if start > top:
        raise RewriteError(f"leaf label x_{start} exceeds rule top x_{top}")
    new = (T.leaves - {leaf}) | {leaf + (k,) for k in range(start, top + 1)}
    out = GenTree(T.arity, frozenset(new))
    I = ideal_from_tree(out)
    if check_borel and not is_borel_fixed(I):
        raise BorelViolation(f"rewriting {leaf} does not give a Borel-fixed ideal")
    return out, I


def apply_lambda(T: GenTree, leaf: tuple | None, ruleset: Ruleset, check_borel: bool = True) -> GenTree:
    """Hyperplane-gin rule: raises the colength by one."""
    return _rewrite(T, leaf, ruleset.lambda_top, check_borel)


def apply_c_rule(T: GenTree, leaf: tuple, ruleset: Ruleset, check_borel: bool = True) -> GenTree:
    """Curve-gin rule: lowers the arithmetic genus by one."""
    if not leaf:
        raise RewriteError("C-rules act on leaves, not on the root")
    return _rewrite(T, leaf, ruleset.c_top, check_borel)


def prune(T: GenTree) -> GenTree:
    """Drop every leaf of maximal depth; their parents become leaves."""
    if not T.leaves:
        return T
    top = max(len(v) for v in T.leaves)
    keep = {v for v in T.leaves if len(v) < top}
    keep |= {v[:-1] for v in T.leaves if len(v) == top}
    if keep == {()}:
        keep = set()
    return GenTree(T.arity, frozenset(keep))


def contract_saturation(T: GenTree, var: int | None = None) -> GenTree:
    """Saturate with respect to ``x_var`` (default: last variable) on the tree.

    While some leaf carries the label ``var``, its parent swallows its whole
    subtree and becomes a leaf.
    """
    var = T.arity - 1 if var is None else var
    leaves = set(T.leaves)
    while True:
        hit = next((v for v in leaves if v and v[-1] == var), None)
        if hit is None:
            break
        p = hit[:-1]
        leaves = {v for v in leaves if v[: len(p)] != p} | {p}
    # a contracted vertex may be a multiple of a leaf on another branch
    gens = minimalize(from_labels(v, T.arity) for v in leaves)
    return GenTree(T.arity, frozenset(label_sequence(g) for g in gens))


def extend_tree(T: GenTree, extra: int = 1) -> GenTree:
    return GenTree(T.arity + extra, T.leaves)


def lambda_successors(I: MonomialIdeal, ruleset: Ruleset) -> Iterator[MonomialIdeal]:
    T = tree_from_ideal(I)
    targets = sorted(T.leaves) if T.leaves else [()]
    for leaf in targets:
        try:
            yield ideal_from_tree(apply_lambda(T, leaf, ruleset))
        except RewriteError:
            continue


def lambda_reachable_set(d: int, ruleset: Ruleset) -> set[MonomialIdeal]:
    """All ideals reached from the empty tree by exactly ``d`` Lambda-rewrites."""
    level = {MonomialIdeal((), ruleset.gin_arity)}
    for _ in range(d):
        level = {J for I in level for J in lambda_successors(I, ruleset)}
    return level


# ---------------------------------------------------------------------------
# traces


@dataclass(frozen=True)
class RewriteStep:
    family: str  # "lambda" or "C"
    ruleset: Ruleset
    leaf: tuple  # label path of the generator that was rewritten
    step_degree: int

    def to_record(self) -> dict:
        return {
            "rule_family": self.family,
            "ruleset": self.ruleset.value,
            "generator_before": list(self.leaf),
            "step_degree": self.step_degree,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "RewriteStep":
        return cls(rec["rule_family"], Ruleset(rec["ruleset"]), tuple(rec["generator_before"]), rec["step_degree"])


@dataclass(frozen=True)
class RewriteTrace:
    start: MonomialIdeal
    steps: tuple = ()
    end: MonomialIdeal | None = None

    def to_records(self) -> list[dict]:
        return [s.to_record() for s in self.steps]


def apply_step(I: MonomialIdeal, step: RewriteStep) -> MonomialIdeal:
    if step.family == "C":
        m = from_labels(step.leaf, I.arity)
        if m not in I.gens:
            raise RewriteError(f"{step.leaf} is not a generator")
        if max_variable(m) > step.ruleset.c_top:
            raise RewriteError(f"leaf label exceeds rule top x_{step.ruleset.c_top}")
        J = rewrite_generator(I, m, step.ruleset.c_top)
        if J is None:
            raise BorelViolation(f"rewriting {step.leaf} does not give a Borel-fixed ideal")
        return J
    T = tree_from_ideal(I)
    if step.family == "lambda":
        out = apply_lambda(T, step.leaf, step.ruleset)
    else:
        raise RewriteError(f"unknown rule family {step.family!r}")
    return ideal_from_tree(out)


def replay(trace: RewriteTrace) -> MonomialIdeal:
    I = trace.start
    for step in trace.steps:
        if len(step.leaf) != step.step_degree:
            raise RewriteError(f"step degree {step.step_degree} does not match {step.leaf}")
        I = apply_step(I, step)
    if trace.end is not None and I != trace.end:
        raise RewriteError("replayed trace does not reach the recorded end")
    return I


def c_step(I: MonomialIdeal, leaf: Iterable[int], ruleset: Ruleset) -> tuple[MonomialIdeal, RewriteStep]:
    leaf = tuple(leaf)
    step = RewriteStep("C", ruleset, leaf, len(leaf))
    return apply_step(I, step), step


def c_successors(I: MonomialIdeal, ruleset: Ruleset) -> Iterator[tuple[MonomialIdeal, RewriteStep]]:
    """Every Borel-preserving single C-rewrite of ``I``."""
    top = ruleset.c_top
    for m in sorted(I.gens, key=label_sequence):
        if max_variable(m) > top:
            continue
        J = rewrite_generator(I, m, top)
        if J is not None:
            yield J, RewriteStep("C", ruleset, label_sequence(m), sum(m))


def to_dot(T: GenTree, name: str = "gentree") -> str:
    """Graphviz rendering; vertex names are label paths, edge labels are x_i."""
    lines = [f"digraph {name} {{", '  node [shape=circle, label=""];']
    ids = {v: f"v{k}" for k, v in enumerate(T.vertices)}
    for v, vid in ids.items():
        style = ", style=filled" if v in T.leaves else ""
        lines.append(f'  {vid} [tooltip="{"".join(map(str, v)) or "root"}"{style}];')
    for v, vid in ids.items():
        if v:
            lines.append(f'  {ids[v[:-1]]} -> {vid} [label="x{v[-1]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
