"""Representation problems for integral quadratic forms.

Searches are bounded: a ``Found`` verdict carries a witness and is a proof,
``NotFoundWithinBound`` only says nothing was found in the max-norm box.
Witness order is lexicographic over coordinates, each coordinate ranked
``0, 1, -1, 2, -2, ...``; see :mod:`k3lattice._kernels`.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd, isqrt
from typing import Optional, Sequence

from . import _kernels
from .hilbert import beauville_extend
from .lattice import IntegralLattice, LatticeInputError, Vector, pair


class SearchStatus(str, Enum):
    FOUND = "Found"
    NOT_FOUND = "NotFoundWithinBound"


@dataclass(frozen=True)
class SearchVerdict:
    status: SearchStatus
    witness: Optional[Vector]
    bound_used: int
    target: Optional[int] = None

    def __post_init__(self):
        if (self.status is SearchStatus.FOUND) != (self.witness is not None):
            raise ValueError("a verdict carries a witness exactly when it is Found")

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND

    def __str__(self):
        if self.found:
            return f"Found {self.witness}"
        return f"NotFoundWithinBound (bound {self.bound_used})"


def _check_bound(bound):
    if isinstance(bound, bool) or not isinstance(bound, int) or bound < 1:
        raise LatticeInputError(f"bound must be a positive integer, got {bound!r}")


def _verdict(L, x, bound, target):
    if x is None:
        return SearchVerdict(SearchStatus.NOT_FOUND, None, bound, target)
    # witnesses are re-checked with exact arithmetic before being reported
    if pair(L, x, x) != target:
        raise RuntimeError(f"kernel returned {x}, whose square is not {target}")
    return SearchVerdict(SearchStatus.FOUND, x, bound, target)


def represent(L: IntegralLattice, target: int, bound: int) -> SearchVerdict:
    """Search the box for a nonzero x with pair(x, x) == target."""
    _check_bound(bound)
    x = _kernels.first_match(L.gram, bound, target)
    return _verdict(L, x, bound, target)


def isotropic_search(L: IntegralLattice, bound: int) -> SearchVerdict:
    """Search the box for a primitive vector of square zero."""
    _check_bound(bound)
    x = _kernels.first_match(L.gram, bound, 0, primitive=True)
    if x is not None:
        assert gcd(*x) == 1
    return _verdict(L, x, bound, 0)


def _reduce_offdiag(a, b):
    # q with |b - q*a| <= |a|/2
    return (2 * b + abs(a)) // (2 * a) if a > 0 else -((2 * b + abs(a)) // (-2 * a))


def gauss_reduce_binary(L: IntegralLattice):
    """Lagrange-Gauss reduction of a rank-2 form.

    Returns ``(L2, U)`` with ``L2.gram == U^T L.gram U`` and det U = 1.  On
    exit ``|2b| <= |a| <= |c|`` for the reduced Gram ``[[a, b], [b, c]]``,
    except when the form represents zero and reduction lands on ``a == 0``;
    then ``|c| <= |b|``, or ``b == 0`` for a degenerate form.  Applies to definite and indefinite forms alike.
    """
    if L.rank != 2:
        raise LatticeInputError(f"gauss_reduce_binary needs rank 2, got rank {L.rank}")
    (a, b), (_, c) = L.gram
    U = [[1, 0], [0, 1]]

    def apply(M):
        nonlocal a, b, c, U
        (p, q), (r, s) = M
        a, b, c = (
            a * p * p + 2 * b * p * r + c * r * r,
            a * p * q + b * (p * s + q * r) + c * r * s,
            a * q * q + 2 * b * q * s + c * s * s,
        )
        U = [[U[0][0] * p + U[0][1] * r, U[0][0] * q + U[0][1] * s],
             [U[1][0] * p + U[1][1] * r, U[1][0] * q + U[1][1] * s]]

    if a == 0 and c != 0 or (c != 0 and abs(c) < abs(a)):
        apply(((0, -1), (1, 0)))
    while True:
        if a == 0:
            if b != 0:
                # shear the second vector: c -> c + 2 t b
                t = -_reduce_offdiag(2 * b, c)
                apply(((1, t), (0, 1)))
            break
        t = _reduce_offdiag(a, b)
        if t:
            apply(((1, -t), (0, 1)))
        if abs(c) < abs(a):
            apply(((0, -1), (1, 0)))
            continue
        break
    return IntegralLattice([[a, b], [b, c]]), ((U[0][0], U[0][1]), (U[1][0], U[1][1]))


def minus_two_classes(L: IntegralLattice, ample: Sequence[int], bound: int) -> list[Vector]:
    """Box vectors C with C.C = -2 and ample.C > 0, in search order."""
    _check_bound(bound)
    ample = L.check_vector(ample, "ample")
    if pair(L, ample, ample) <= 0:
        raise LatticeInputError("ample class must have positive square")
    linear = [sum(ample[i] * L.gram[i][j] for i in range(L.rank)) for j in range(L.rank)]
    found = _kernels.all_matches(L.gram, bound, -2, linear)
    for C in found:
        if pair(L, C, C) != -2 or pair(L, ample, C) <= 0:
            raise RuntimeError(f"kernel returned invalid (-2)-class {C}")
    # the box is enumerated once, so no duplicates can occur
    return found


@dataclass(frozen=True)
class ZeroEquivalence:
    """Both sides of: Beauville form of S^[2] isotropic <=> Pic(S) represents 2m^2."""

    beauville_side: SearchVerdict
    surface_side: SearchVerdict
    m: Optional[int]

    @property
    def consistent(self) -> bool:
        return self.beauville_side.found == self.surface_side.found

    def __iter__(self):
        yield self.beauville_side
        yield self.surface_side
        yield self.consistent


def beauville_zero_iff_2m2(S: IntegralLattice, bound: int) -> ZeroEquivalence:
    """Run both searches and report whether their outcomes agree.

    The surface side tries ``2m^2`` for m = 0, 1, 2, ... while ``2m^2`` can
    still be a value of the form on the box, and stops at the first hit.
    """
    _check_bound(bound)
    ext = beauville_extend(S, 2).extended
    iso = isotropic_search(ext, bound)
    reach = bound * bound * sum(abs(v) for row in S.gram for v in row)
    surface = SearchVerdict(SearchStatus.NOT_FOUND, None, bound, None)
    hit_m = None
    for m in range(isqrt(reach // 2) + 1):
        v = represent(S, 2 * m * m, bound)
        if v.found:
            surface, hit_m = v, m
            break
    return ZeroEquivalence(iso, surface, hit_m)
