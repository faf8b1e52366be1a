"""Sparse multivariate polynomials keyed by exponent tuples."""

from __future__ import annotations

import re
from typing import Iterable

from gincalc.groebner.field import GF, PrimeField, RationalField
from gincalc.monomials import ArityMismatch, format_monomial, parse_monomial, revlex_key

Field = PrimeField | RationalField


class Polynomial:
    __slots__ = ("terms", "arity", "field")

    def __init__(self, terms: dict, arity: int, field: Field = GF):
        self.arity = arity
        self.field = field
        clean = {}
        for m, c in terms.items():
            if len(m) != arity:
                raise ArityMismatch(f"monomial {m} in arity {arity}")
            c = field.norm(c)
            if c:
                clean[tuple(m)] = c
        self.terms = clean

    @classmethod
    def monomial(cls, m: tuple, field: Field = GF, coeff=1) -> "Polynomial":
        return cls({m: coeff}, len(m), field)

    def _wrap(self, terms: dict) -> "Polynomial":
        out = Polynomial.__new__(Polynomial)
        out.terms, out.arity, out.field = terms, self.arity, self.field
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def leading_monomial(self) -> tuple:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=revlex_key)

    def leading_coeff(self):
        return self.terms[self.leading_monomial()]

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    @property
    def homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        return max(self.degrees(), default=-1)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        norm = self.field.norm
        for m, c in other.terms.items():
            v = norm(out.get(m, 0) + c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return self._wrap(out)

    def __neg__(self) -> "Polynomial":
        norm = self.field.norm
        return self._wrap({m: norm(-c) for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c) -> "Polynomial":
        c = self.field.norm(c)
        if not c:
            return self._wrap({})
        norm = self.field.norm
        return self._wrap({m: norm(v * c) for m, v in self.terms.items()})

    def shift(self, mono: tuple, c=1) -> "Polynomial":
        """``c * mono * self``."""
        norm = self.field.norm
        return self._wrap({tuple(a + b for a, b in zip(m, mono)): norm(v * c) for m, v in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out: dict = {}
        norm = self.field.norm
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out, self.arity, self.field) if out else self._wrap({})

    def monic(self) -> "Polynomial":
        return self.scale(self.field.inv(self.leading_coeff()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=revlex_key, reverse=True):
            c = self.terms[m]
            mono = format_monomial(m)
            parts.append(mono if c == 1 else (str(c) if mono == "1" else f"{c}*{mono}"))
        return " + ".join(parts)

    __repr__ = __str__


_TERM = re.compile(r"([+-]?)\s*([^+-]+)")


def parse_polynomial(text: str, arity: int, field: Field = GF) -> Polynomial:
    """Parse ``"x0*x2 - x1^2 + 3*x3^2"``; a bare exponent tuple is a monomial."""
    text = text.strip()
    if text and text[0].isdigit() and len(text.split()) == arity:
        return Polynomial.monomial(parse_monomial(text, arity), field)
    terms: dict = {}
    for sign, body in _TERM.findall(text.replace(" ", "")):
        factors = body.split("*")
        coeff = 1
        if factors and re.fullmatch(r"\d+(/\d+)?", factors[0]):
            num, _, den = factors.pop(0).partition("/")
            coeff = field.norm(int(num)) if not den else field.norm(int(num)) * field.inv(field.norm(int(den)))
        m = parse_monomial("*".join(factors) if factors else "1", arity)
        c = -coeff if sign == "-" else coeff
        terms[m] = terms.get(m, 0) + c
    return Polynomial(terms, arity, field)


def read_polynomials(text: str, field: Field = GF) -> tuple[list[Polynomial], int]:
    """Line-oriented file: ``vars: N`` header, ``#`` comments, one generator per line."""
    arity = None
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("vars:"):
            arity = int(line.split(":", 1)[1])
            continue
        if arity is None:
            raise ValueError("generator before 'vars:' header")
        out.append(parse_polynomial(line, arity, field))
    if arity is None:
        raise ValueError("missing 'vars:' header")
    return out, arity


def from_monomials(mons: Iterable[tuple], field: Field = GF) -> list[Polynomial]:
    return [Polynomial.monomial(m, field) for m in mons]
