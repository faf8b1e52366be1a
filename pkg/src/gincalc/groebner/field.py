"""Coefficient fields: a prime field (default) or the rationals for audits."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

DEFAULT_PRIME = 32003


@dataclass(frozen=True)
class PrimeField:
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.p < 2 or any(self.p % q == 0 for q in range(2, int(self.p ** 0.5) + 1)):
            raise ValueError(f"{self.p} is not prime")

    def norm(self, c) -> int:
        if isinstance(c, Fraction):
            return c.numerator * pow(c.denominator, -1, self.p) % self.p
        return int(c) % self.p

    def inv(self, c: int) -> int:
        if c % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(c, -1, self.p)

    def __str__(self):
        return f"GF({self.p})"


@dataclass(frozen=True)
class RationalField:
    def norm(self, c) -> Fraction:
        return Fraction(c)

    def inv(self, c) -> Fraction:
        return 1 / Fraction(c)

    def __str__(self):
        return "QQ"


GF = PrimeField()
QQ = RationalField()
