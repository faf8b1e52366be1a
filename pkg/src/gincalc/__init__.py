"""Generic initial ideals of curves, generator trees and cohomology bounds."""

from gincalc.monomials import MonomialIdeal, ideal, read_ideal

__all__ = ["MonomialIdeal", "ideal", "read_ideal"]
