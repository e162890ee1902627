"""K3-specific bookkeeping: genus, reflections, ampleness scans and small counts."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional, Sequence, Union

from .lattice import (
    IntegralLattice,
    LatticeInputError,
    Vector,
    discriminant,
    pair,
    sublattice_gram,
)
from .quadrep import minus_two_classes


def genus_of_class(L: IntegralLattice, C: Sequence[int]) -> int:
    """Arithmetic genus C^2/2 + 1 of a curve class on a K3 surface."""
    c2 = pair(L, C, C)
    if c2 % 2:
        raise LatticeInputError(f"C^2 = {c2} is odd; K3 lattices are even")
    if c2 < -2:
        raise LatticeInputError(f"C^2 = {c2} < -2 is not the class of an irreducible curve")
    return c2 // 2 + 1


@dataclass(frozen=True)
class KodairaDim:
    """Kodaira dimension; ``value=None`` stands for minus infinity."""

    value: Optional[int]

    MINUS_INFINITY = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.value is not None and self.value < 0:
            raise ValueError(f"Kodaira dimension must be >= 0 or minus infinity, got {self.value}")

    @property
    def is_minus_infinity(self) -> bool:
        return self.value is None

    def __str__(self):
        return "-inf" if self.value is None else str(self.value)


KodairaDim.MINUS_INFINITY = KodairaDim(None)


def kodaira_dim_sym(k: Union[KodairaDim, int, None], n: int, surface: bool = True) -> KodairaDim:
    """Kodaira dimension of the n-th symmetric product: n * k, -inf absorbing."""
    if not isinstance(k, KodairaDim):
        k = KodairaDim(k)
    if n < 1:
        raise LatticeInputError(f"n must be positive, got {n}")
    if surface and k.value is not None and k.value > 2:
        raise LatticeInputError(f"a surface has Kodaira dimension at most 2, got {k.value}")
    if k.is_minus_infinity:
        return KodairaDim.MINUS_INFINITY
    return KodairaDim(n * k.value)


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted(self.parts, reverse=True))
        if not parts or any(p < 1 for p in parts):
            raise LatticeInputError(f"partition parts must be positive integers, got {self.parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, largest first part first."""
    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail

    for parts in rec(n, n):
        yield Partition(parts)


def stratum_dim_bound(p: Partition) -> tuple[int, bool]:
    """Dimension bound for the preimage of a stratum in the Hilbert scheme.

    The points meet the stratum in a set of dimension #{a_j = 1} and the
    punctual fibers add sum(a_j - 1).  Returns the bound and whether it is
    strictly below n.
    """
    bound = sum(1 for a in p.parts if a == 1) + sum(a - 1 for a in p.parts)
    return bound, bound < p.n


def picard_lefschetz_reflect(L: IntegralLattice, x: Sequence[int], C: Sequence[int]) -> Vector:
    """x -> x + <x, C> C for a (-2)-class C."""
    if pair(L, C, C) != -2:
        raise LatticeInputError(f"reflection needs C^2 = -2, got {pair(L, C, C)}")
    t = pair(L, x, C)
    return tuple(xi + t * ci for xi, ci in zip(x, C))


class AmplenessStatus(str, Enum):
    OBSTRUCTED = "Obstructed"
    NO_OBSTRUCTION = "NoObstructionWithinBound"


@dataclass(frozen=True)
class ObstructionEvidence:
    C: Vector
    candidate_dot_C: int
    reflected: Optional[Vector] = None
    reflected_sublattice_disc: Optional[int] = None


@dataclass(frozen=True)
class AmplenessVerdict:
    status: AmplenessStatus
    witness: Optional[Vector]
    bound_used: int
    lattice_disc: int
    minus_two_classes: tuple[Vector, ...]
    obstructions: tuple[ObstructionEvidence, ...] = field(default=())


def ampleness_obstruction_scan(L: IntegralLattice, ample: Sequence[int],
                               candidate: Sequence[int], bound: int) -> AmplenessVerdict:
    """Look for (-2)-classes C (positive against ``ample``) with candidate.C <= 0.

    For each C with candidate.C < 0 the discriminant of the span of the
    reflected candidate and ``ample`` is reported next to disc(L).  The
    comparison is left to the caller.
    """
    candidate = L.check_vector(candidate, "candidate")
    classes = minus_two_classes(L, ample, bound)
    evidence = []
    for C in classes:
        t = pair(L, candidate, C)
        if t > 0:
            continue
        if t < 0:
            rho = picard_lefschetz_reflect(L, candidate, C)
            d = discriminant(sublattice_gram(L, [rho, ample]))
            evidence.append(ObstructionEvidence(C, t, rho, d))
        else:
            evidence.append(ObstructionEvidence(C, t))
    status = AmplenessStatus.OBSTRUCTED if evidence else AmplenessStatus.NO_OBSTRUCTION
    return AmplenessVerdict(
        status,
        evidence[0].C if evidence else None,
        bound,
        discriminant(L),
        tuple(classes),
        tuple(evidence),
    )


class Degree2Case(str, Enum):
    FIBER_CLASS_EQUALS_G = "FiberClassEqualsG"
    ELLIPTIC_K3 = "EllipticK3"


@dataclass(frozen=True)
class CaseVerdict:
    case: Degree2Case
    justification: str


def degree2_case_analysis(gg: int, gE: int, EE: int) -> CaseVerdict:
    """Case split for a genus-one curve E on a degree-2 K3 with g - E effective.

    Either E is in the class g, or <E,E> < <g,E> < <g,g> = 2, and the only
    even nonnegative <E,E> below 1 is 0.
    """
    if gg != 2:
        raise LatticeInputError(f"<g,g> must be 2 for a degree-2 K3 surface, got {gg}")
    if EE < 0 or EE % 2:
        raise LatticeInputError(f"<E,E> must be even and nonnegative, got {EE}")
    if (gE, EE) == (2, 2):
        return CaseVerdict(Degree2Case.FIBER_CLASS_EQUALS_G, "<g,E> = <E,E> = <g,g> = 2: E = g")
    if not EE < gE:
        raise LatticeInputError(f"inequality <E,E> < <g,E> violated: {EE} >= {gE}")
    if not gE < gg:
        raise LatticeInputError(f"inequality <g,E> < <g,g> violated: {gE} >= {gg}")
    # 0 <= EE < gE < 2 leaves EE = 0, gE = 1
    assert EE == 0
    return CaseVerdict(
        Degree2Case.ELLIPTIC_K3,
        f"{EE} = <E,E> < <g,E> = {gE} < <g,g> = {gg}, <E,E> even => <E,E> = 0",
    )


def kummer_intersection_count(n: int) -> tuple[int, int]:
    """(isogeny degree, D1.D2) for the Kummer degeneration of genus index n.

    The graph of a degree 2n+5 isogeny meets E1 x p in 2n+5 points; one is
    2-torsion, the other 2n+4 pair up under -1, leaving n+2 intersections.
    """
    if n < 1:
        raise LatticeInputError(f"n must be positive, got {n}")
    deg = 2 * n + 5
    meet = n + 2
    assert meet == (deg - 1) // 2
    return deg, meet


def multisection_degree(n: int) -> int:
    """Points where a curve of degree 2(n-1) meets n genus-one curves in its class."""
    if n < 2:
        raise LatticeInputError(f"n must be at least 2, got {n}")
    return n * (2 * n - 2)
