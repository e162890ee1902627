"""Lattice-side hypotheses of the density criterion on S^[2].

For a polarization f with f^2 = 2m^2 and a curve class g with g^2 > 0, the
fibration class f - me must meet g*g positively:

    (f - me)^2 . (g*g) = 2<f,g>^2 - m^2<g,g> > 0.

This follows from the Hodge index theorem, which makes the Gram determinant
of (f, g) negative.  ``check_density_hypotheses`` reports each step
separately so they can be cross-checked.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import isqrt
from typing import Sequence

from .hilbert import beauville_extend, star_square_pairing
from .lattice import (
    IntegralLattice,
    LatticeInputError,
    Vector,
    hodge_index_valid,
    pair,
    signature,
)
from .report import ClaimReport


@dataclass(frozen=True)
class K3Input:
    lattice: IntegralLattice
    polarization: Vector
    n: int = 2
    bound: int = 50

    def __post_init__(self):
        f = self.lattice.check_vector(self.polarization, "polarization")
        object.__setattr__(self, "polarization", f)
        d = pair(self.lattice, f, f)
        if d <= 0 or d % 2:
            raise LatticeInputError(f"polarization must have positive even square, got {d}")
        if not hodge_index_valid(self.lattice):
            raise LatticeInputError(
                f"lattice signature {tuple(signature(self.lattice))} is not (1, rank-1, 0)"
            )
        if self.n < 2:
            raise LatticeInputError(f"n must be at least 2, got {self.n}")
        if self.bound < 1:
            raise LatticeInputError(f"bound must be positive, got {self.bound}")


def degree_to_m(d: int) -> int:
    """m > 0 with d = 2m^2, or LatticeInputError."""
    if d > 0 and d % 2 == 0:
        m = isqrt(d // 2)
        if 2 * m * m == d:
            return m
    raise LatticeInputError(f"polarization degree {d} is not of the form 2m^2 (degree 2m^2 required)")


def check_density_hypotheses(inp: K3Input, g: Sequence[int]) -> ClaimReport:
    L, f = inp.lattice, inp.polarization
    m = degree_to_m(pair(L, f, f))
    g = L.check_vector(g, "g")
    gg = pair(L, g, g)
    if gg <= 0:
        raise LatticeInputError(f"<g,g> must be positive, got {gg}")
    ff = pair(L, f, f)
    fg = pair(L, f, g)

    rep = ClaimReport("density-check", None, inp.bound)
    sig = signature(L)
    rep.add(
        "density.a.hodge_shape",
        "Picard lattice of a surface has signature (1, rho-1)",
        f"({sig.n_plus},{sig.n_minus},{sig.n_zero})",
        f"(1,{L.rank - 1},0)",
    )
    det = ff * gg - fg * fg
    rep.add(
        "density.b.gram_determinant",
        "det [[2m^2, <f,g>], [<f,g>, <g,g>]] < 0 (Hodge index)",
        det, 0, "<",
        detail="g proportional to f" if det == 0 else f"m={m}, <f,g>={fg}, <g,g>={gg}",
    )
    rep.add(
        "density.c.positivity",
        "2<f,g>^2 > m^2 <g,g>",
        2 * fg * fg, m * m * gg, ">",
    )
    B = beauville_extend(L, 2)
    star = star_square_pairing(B, f, m, g)
    rep.add(
        "density.d.star_square",
        "(f-me).(f-me).(g*g) = 2<f,g>^2 - m^2<g,g>",
        star, 2 * fg * fg - m * m * gg, "==",
        detail="positive" if star > 0 else "not positive",
    )
    rep.add(
        "density.d.star_square_positive",
        "(f-me).(f-me).(g*g) > 0",
        star, 0, ">",
    )
    return rep


# -- random instances --------------------------------------------------------


def transform(gram, U):
    """U^T G U."""
    n = len(gram)
    GU = [[sum(gram[i][t] * U[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
    return [[sum(U[t][i] * GU[t][j] for t in range(n)) for j in range(n)] for i in range(n)]


def matvec(M, v) -> Vector:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in M)


def random_unimodular(rng: random.Random, n: int, steps: int = 6, spread: int = 2):
    """Random (U, U^-1) with det U = +-1, built from elementary moves."""
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    V = [row[:] for row in U]
    for _ in range(steps):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-spread, spread)
        # column op on U: col_j += c col_i ; matching row op on V: row_i -= c row_j
        for r in range(n):
            U[r][j] += c * U[r][i]
        for col in range(n):
            V[i][col] -= c * V[j][col]
    if rng.random() < 0.5:
        k = rng.randrange(n)
        for r in range(n):
            U[r][k] = -U[r][k]
        V[k] = [-v for v in V[k]]
    return U, V


def random_hodge_instance(rng: random.Random, max_rank: int = 5, max_m: int = 6):
    """Random (L, f, g, m): L of signature (1, r-1), f^2 = 2m^2, g^2 > 0, g not parallel to f.

    Built as diag(2m^2, -d_2, ..., -d_r) in a hidden basis, then moved to a
    random basis by a unimodular change of coordinates.
    """
    r = rng.randint(2, max_rank)
    m = rng.randint(1, max_m)
    D = [[0] * r for _ in range(r)]
    D[0][0] = 2 * m * m
    for i in range(1, r):
        D[i][i] = -rng.randint(1, 8)
    U, V = random_unimodular(rng, r)
    L = IntegralLattice(transform(D, U))
    # hidden coordinates y correspond to lattice coordinates V y
    f = matvec(V, [1] + [0] * (r - 1))
    while True:
        y = [rng.randint(-4, 4) for _ in range(r)]
        if not any(y[1:]):
            continue
        if sum(D[i][i] * y[i] * y[i] for i in range(r)) > 0:
            break
    g = matvec(V, y)
    return L, f, g, m
