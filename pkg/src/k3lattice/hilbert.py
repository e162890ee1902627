"""Beauville lattices of Hilbert schemes of points on a K3 surface.

Pic(S^[n]) is Pic(S) plus one extra generator ``e`` orthogonal to it, with
(e, e) = -2(n - 1); the class 2e is the locus of nonreduced subschemes.
Whether e itself is the class of a divisor on a particular S^[2] is not
something lattice data can decide.

For n = 2 the top intersection of four divisors is the symmetrized product
of Beauville pairings, (a,b)(c,d) + (a,c)(b,d) + (a,d)(b,c).  Other n are
refused since their normalizing constant is not fixed here.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .lattice import (
    IntegralLattice,
    LatticeInputError,
    Vector,
    orthogonal_sum,
    pair,
)


@dataclass(frozen=True)
class BeauvilleLattice:
    n: int
    base: IntegralLattice
    extended: IntegralLattice

    @property
    def e(self) -> Vector:
        return self.extended.basis_vector(self.base.rank)

    def embed(self, f: Sequence[int], e_coeff: int = 0) -> Vector:
        """Coordinates of ``f + e_coeff * e`` in the extended lattice."""
        return self.base.check_vector(f, "surface class") + (e_coeff,)


@dataclass(frozen=True)
class HilbertClass:
    """A class ``surface_part + e_coeff * e`` on S^[n]."""

    surface_part: Vector
    e_coeff: int = 0

    @property
    def coords(self) -> Vector:
        return tuple(self.surface_part) + (self.e_coeff,)

    @classmethod
    def from_coords(cls, coords: Sequence[int]) -> "HilbertClass":
        return cls(tuple(coords[:-1]), coords[-1])


ClassLike = Union[HilbertClass, Sequence[int]]


def _coords(B: BeauvilleLattice, x: ClassLike) -> Vector:
    if isinstance(x, HilbertClass):
        x = x.coords
    return B.extended.check_vector(x, "class")


def beauville_extend(S: IntegralLattice, n: int) -> BeauvilleLattice:
    if n < 2:
        raise LatticeInputError(f"n must be at least 2, got {n}")
    if S.labels is not None and "e" in S.labels:
        raise LatticeInputError("label 'e' is reserved for the diagonal generator")
    extra = IntegralLattice([[-2 * (n - 1)]], ["e"])
    return BeauvilleLattice(n, S, orthogonal_sum(S, extra))


def _require_n2(B: BeauvilleLattice, what: str):
    if B.n != 2:
        raise NotImplementedError(f"{what} is only available on S^[2], got n={B.n}")


def debarre_involution(B: BeauvilleLattice, f4: Sequence[int], x: ClassLike) -> HilbertClass:
    """Action of the Beauville-Debarre involution: x -> -x + (f4 - e, x)(f4 - e).

    ``f4`` is the quartic polarization on S.  The map is an involutive
    isometry exactly when (f4 - e)^2 = 2, which is checked.
    """
    _require_n2(B, "the Beauville-Debarre involution")
    v = B.embed(f4, -1)
    if pair(B.extended, v, v) != 2:
        raise LatticeInputError(
            f"(f4 - e)^2 = {pair(B.extended, v, v)}, expected 2 (f4 must have square 4)"
        )
    x = _coords(B, x)
    t = pair(B.extended, v, x)
    return HilbertClass.from_coords(tuple(-xi + t * vi for xi, vi in zip(x, v)))


def quadruple_intersection(B: BeauvilleLattice, a: ClassLike, b: ClassLike,
                           c: ClassLike, d: ClassLike) -> int:
    _require_n2(B, "the quadruple intersection")
    L = B.extended
    a, b, c, d = (_coords(B, v) for v in (a, b, c, d))
    return (pair(L, a, b) * pair(L, c, d)
            + pair(L, a, c) * pair(L, b, d)
            + pair(L, a, d) * pair(L, b, c))


def sigma_pairing(B: BeauvilleLattice, f: Sequence[int], m: int) -> int:
    """(f - me)^2 against the surface of subschemes through a fixed point.

    That surface is S blown up at the point, with e restricting to the
    exceptional curve, so the answer is <f,f> - m^2.
    """
    _require_n2(B, "the point-surface pairing")
    return pair(B.base, f, f) - m * m


def star_square_pairing(B: BeauvilleLattice, f: Sequence[int], m: int, g: Sequence[int]) -> int:
    """(f - me)^2 . (g*g) where g*g = g.g - <g,g> Sigma.

    Evaluated both through the decomposition and in closed form
    2<f,g>^2 - m^2<g,g>; the two must agree.
    """
    S = B.base
    fm = B.embed(f, -m)
    gg_ = B.embed(g)
    via_parts = quadruple_intersection(B, fm, fm, gg_, gg_) - pair(S, g, g) * sigma_pairing(B, f, m)
    closed = 2 * pair(S, f, g) ** 2 - m * m * pair(S, g, g)
    if via_parts != closed:
        raise ArithmeticError(f"decomposition gives {via_parts}, closed form gives {closed}")
    return closed
