"""Integral lattices given by a symmetric integer Gram matrix.

Vectors are plain tuples of Python ints holding coordinates in the lattice
basis.  Everything here is exact: no floating point is ever involved, and
Python's arbitrary-precision ints mean Gram entries may grow without limit.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Sequence

Vector = tuple[int, ...]


class LatticeInputError(ValueError):
    """Raised when an operation receives data violating its preconditions."""


def _as_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        try:
            import numpy as np
            if isinstance(value, np.integer):
                return int(value)
        except ImportError:  # pragma: no cover
            pass
        raise LatticeInputError(f"{where}: expected integer, got {value!r}")
    return value


@dataclass(frozen=True)
class IntegralLattice:
    """Free Z-module with an integer symmetric bilinear form.

    ``labels`` are names for the basis vectors and carry no arithmetic
    meaning.  A rank-0 lattice is allowed (the neutral element of the
    orthogonal sum).
    """

    gram: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[str, ...]] = None

    def __init__(self, gram: Iterable[Iterable[int]], labels: Optional[Sequence[str]] = None):
        rows = tuple(
            tuple(_as_int(v, f"gram[{i}][{j}]") for j, v in enumerate(row))
            for i, row in enumerate(gram)
        )
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise LatticeInputError(f"gram[{i}]: expected {n} entries, got {len(row)}")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise LatticeInputError(
                        f"gram[{i}][{j}]={rows[i][j]} differs from gram[{j}][{i}]={rows[j][i]}: "
                        "Gram matrix must be symmetric"
                    )
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise LatticeInputError(f"labels: expected {n} names, got {len(labels)}")
            if len(set(labels)) != n:
                raise LatticeInputError(f"labels: names must be distinct, got {list(labels)}")
        object.__setattr__(self, "gram", rows)
        object.__setattr__(self, "labels", labels)

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def names(self) -> tuple[str, ...]:
        """Basis names, falling back to ``b0, b1, ...`` when unlabeled."""
        if self.labels is not None:
            return self.labels
        return tuple(f"b{i}" for i in range(self.rank))

    def basis_vector(self, which) -> Vector:
        i = self.names.index(which) if isinstance(which, str) else which
        return tuple(int(j == i) for j in range(self.rank))

    def check_vector(self, x: Sequence[int], name: str = "vector") -> Vector:
        if len(x) != self.rank:
            raise LatticeInputError(
                f"{name} has length {len(x)} but the lattice has rank {self.rank}"
            )
        return tuple(_as_int(c, f"{name}[{i}]") for i, c in enumerate(x))

    def __repr__(self) -> str:
        lab = f", labels={list(self.labels)}" if self.labels else ""
        return f"IntegralLattice({[list(r) for r in self.gram]}{lab})"


@dataclass(frozen=True)
class SignatureProfile:
    n_plus: int
    n_minus: int
    n_zero: int

    def __iter__(self):
        yield self.n_plus
        yield self.n_minus
        yield self.n_zero


def pair(L: IntegralLattice, x: Sequence[int], y: Sequence[int]) -> int:
    x = L.check_vector(x, "x")
    y = L.check_vector(y, "y")
    total = 0
    for i, xi in enumerate(x):
        if xi:
            row = L.gram[i]
            total += xi * sum(g * yj for g, yj in zip(row, y))
    return total


def norm(L: IntegralLattice, x: Sequence[int]) -> int:
    """Self-pairing ``pair(L, x, x)``."""
    return pair(L, x, x)


def bareiss_det(M: Sequence[Sequence[int]]) -> int:
    # fraction-free elimination, every division is exact
    A = [list(r) for r in M]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i = A[i]
            row_k = A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * A[n - 1][n - 1]


def discriminant(L: IntegralLattice) -> int:
    return bareiss_det(L.gram)


def charpoly(M: Sequence[Sequence[int]]) -> list[int]:
    """Coefficients of det(tI - M), lowest degree first (Faddeev-LeVerrier).

    The divisions by k are exact for integer matrices.
    """
    n = len(M)
    A = [list(r) for r in M]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[n - k + 1]
        # Mk <- A * Mk + c_prev * I
        Mk = [
            [sum(A[i][t] * Mk[t][j] for t in range(n)) + (c_prev if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        tr = sum(A[i][t] * Mk[t][i] for i in range(n) for t in range(n))
        q, r = divmod(-tr, k)
        assert r == 0
        coeffs[n - k] = q
    return coeffs


def _sign_changes(coeffs: Iterable[int]) -> int:
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(a != b for a, b in zip(signs, signs[1:]))


def signature(L: IntegralLattice) -> SignatureProfile:
    """Inertia of the form from the characteristic polynomial.

    A real symmetric matrix has a real-rooted characteristic polynomial, and
    for real-rooted polynomials Descartes' rule of signs is exact.
    """
    n = L.rank
    if n == 0:
        return SignatureProfile(0, 0, 0)
    c = charpoly(L.gram)
    n_zero = next(i for i, v in enumerate(c) if v != 0)
    c = c[n_zero:]
    n_plus = _sign_changes(c)
    n_minus = _sign_changes(v if i % 2 == 0 else -v for i, v in enumerate(c))
    assert n_plus + n_minus + n_zero == n
    return SignatureProfile(n_plus, n_minus, n_zero)


def orthogonal_sum(L1: IntegralLattice, L2: IntegralLattice) -> IntegralLattice:
    r1, r2 = L1.rank, L2.rank
    gram = [list(row) + [0] * r2 for row in L1.gram]
    gram += [[0] * r1 + list(row) for row in L2.gram]
    labels = None
    if L1.labels is not None or L2.labels is not None:
        left = list(L1.names)
        taken = set(left)
        right = []
        for name in L2.names:
            new, k = name, 2
            while new in taken:
                new = f"{name}_{k}"
                k += 1
            taken.add(new)
            right.append(new)
        labels = left + right
    return IntegralLattice(gram, labels)


def sublattice_gram(L: IntegralLattice, vectors: Sequence[Sequence[int]]) -> IntegralLattice:
    if not vectors:
        raise LatticeInputError("sublattice_gram needs at least one vector")
    vs = [L.check_vector(v, f"vectors[{i}]") for i, v in enumerate(vectors)]
    return IntegralLattice([[pair(L, u, v) for v in vs] for u in vs])


def is_primitive(x: Sequence[int]) -> bool:
    if not any(x):
        raise LatticeInputError("primitivity is undefined for the zero vector")
    return gcd(*x) == 1


def hodge_index_valid(L: IntegralLattice) -> bool:
    """True when the form has the Picard-lattice shape (1, rank-1, 0)."""
    return tuple(signature(L)) == (1, L.rank - 1, 0)


def lincomb(*terms: tuple[int, Sequence[int]]) -> Vector:
    """Integer linear combination ``sum(c * v)`` of equal-length vectors."""
    n = len(terms[0][1])
    out = [0] * n
    for c, v in terms:
        for i in range(n):
            out[i] += c * v[i]
    return tuple(out)
