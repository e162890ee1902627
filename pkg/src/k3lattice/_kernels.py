"""Box-enumeration kernels for quadratic-form searches.

The search box is every integer vector with max-norm <= bound.  Vectors are
visited in lexicographic order where each coordinate runs through the
integer order ``0, 1, -1, 2, -2, ...`` (the "zigzag" order), last coordinate
fastest.  All three backends visit the same order, so results coincide:

* ``numba``  -- compiled odometer loop (default when numba imports)
* ``numpy``  -- chunked vectorized evaluation
* ``python`` -- arbitrary-precision fallback, used automatically whenever
  the int64 kernels could overflow

Set ``K3LATTICE_BACKEND=numpy`` to disable numba.
"""
from __future__ import annotations

import itertools
import os
from math import gcd

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

INT64_SAFE = 1 << 62
CHUNK_ROWS = 1 << 18

_requested = os.environ.get("K3LATTICE_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy", "python"):
    raise ImportError(f"K3LATTICE_BACKEND must be numba, numpy or python, got {_requested!r}")
if _requested == "numba" and not HAVE_NUMBA:
    raise ImportError("K3LATTICE_BACKEND=numba but numba is not installed")
BACKEND = _requested or ("numba" if HAVE_NUMBA else "numpy")


def zigzag_values(bound: int) -> list[int]:
    out = [0]
    for k in range(1, bound + 1):
        out += [k, -k]
    return out


def fits_int64(gram, bound: int, linear=None) -> bool:
    """Whether every form/pairing value on the box stays well inside int64."""
    b2 = bound * bound
    if b2 * sum(abs(v) for row in gram for v in row) >= INT64_SAFE:
        return False
    if linear is not None and bound * sum(abs(v) for v in linear) >= INT64_SAFE:
        return False
    return True


# -- pure python (bigint) -------------------------------------------------


def _qform(gram, x):
    return sum(xi * gij * xj for row, xi in zip(gram, x) if xi for gij, xj in zip(row, x))


def first_match_python(gram, bound, target, primitive):
    for x in itertools.product(zigzag_values(bound), repeat=len(gram)):
        if not any(x):
            continue
        if _qform(gram, x) == target and (not primitive or gcd(*x) == 1):
            return tuple(x)
    return None


def all_matches_python(gram, bound, target, linear):
    out = []
    for x in itertools.product(zigzag_values(bound), repeat=len(gram)):
        if not any(x):
            continue
        if _qform(gram, x) == target and sum(a * b for a, b in zip(linear, x)) > 0:
            out.append(tuple(x))
    return out


# -- numpy ------------------------------------------------------------------


def _box_chunks(rank, bound):
    vals = np.asarray(zigzag_values(bound), dtype=np.int64)
    side = vals.size
    # split off leading coordinates until the trailing block is small enough
    lead = 0
    while lead < rank and side ** (rank - lead) > CHUNK_ROWS:
        lead += 1
    tail = rank - lead
    if tail:
        grids = np.meshgrid(*([vals] * tail), indexing="ij")
        block = np.stack([g.ravel() for g in grids], axis=1)
    else:
        block = np.zeros((1, 0), dtype=np.int64)
    for prefix in itertools.product(vals.tolist(), repeat=lead):
        head = np.broadcast_to(np.asarray(prefix, dtype=np.int64), (block.shape[0], lead))
        yield np.concatenate([head, block], axis=1)


def _chunk_hits(X, G, target):
    q = np.einsum("ni,ij,nj->n", X, G, X)
    return (q == target) & X.any(axis=1)


def first_match_numpy(gram, bound, target, primitive):
    G = np.asarray(gram, dtype=np.int64)
    for X in _box_chunks(len(gram), bound):
        hit = _chunk_hits(X, G, target)
        if primitive:
            hit &= np.gcd.reduce(X, axis=1) == 1
        idx = np.flatnonzero(hit)
        if idx.size:
            return tuple(int(v) for v in X[idx[0]])
    return None


def all_matches_numpy(gram, bound, target, linear):
    G = np.asarray(gram, dtype=np.int64)
    w = np.asarray(linear, dtype=np.int64)
    found = []
    for X in _box_chunks(len(gram), bound):
        hit = _chunk_hits(X, G, target) & (X @ w > 0)
        found.extend(tuple(int(v) for v in row) for row in X[hit])
    return found


# -- numba ------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def _zz(idx):
        if idx % 2 == 1:
            return (idx + 1) // 2
        return -(idx // 2)

    @njit(cache=True)
    def _first_match_nb(G, bound, target, primitive):
        r = G.shape[0]
        side = 2 * bound + 1
        digits = np.zeros(r, dtype=np.int64)
        x = np.zeros(r, dtype=np.int64)
        while True:
            # advance odometer (skips the all-zero start)
            k = r - 1
            while k >= 0:
                digits[k] += 1
                if digits[k] < side:
                    break
                digits[k] = 0
                k -= 1
            if k < 0:
                return x, False
            for i in range(r):
                x[i] = _zz(digits[i])
            q = 0
            for i in range(r):
                if x[i] != 0:
                    s = 0
                    for j in range(r):
                        s += G[i, j] * x[j]
                    q += x[i] * s
            if q != target:
                continue
            if primitive:
                g = 0
                for i in range(r):
                    a = abs(x[i])
                    while a:
                        g, a = a, g % a
                if g != 1:
                    continue
            return x, True

    @njit(cache=True)
    def _all_matches_nb(G, bound, target, w):
        r = G.shape[0]
        side = 2 * bound + 1
        digits = np.zeros(r, dtype=np.int64)
        x = np.zeros(r, dtype=np.int64)
        cap = 64
        out = np.empty((cap, r), dtype=np.int64)
        n = 0
        while True:
            k = r - 1
            while k >= 0:
                digits[k] += 1
                if digits[k] < side:
                    break
                digits[k] = 0
                k -= 1
            if k < 0:
                return out[:n]
            lin = 0
            for i in range(r):
                x[i] = _zz(digits[i])
                lin += w[i] * x[i]
            if lin <= 0:
                continue
            q = 0
            for i in range(r):
                if x[i] != 0:
                    s = 0
                    for j in range(r):
                        s += G[i, j] * x[j]
                    q += x[i] * s
            if q == target:
                if n == cap:
                    cap *= 2
                    grown = np.empty((cap, r), dtype=np.int64)
                    grown[:n] = out[:n]
                    out = grown
                out[n] = x
                n += 1

    def first_match_numba(gram, bound, target, primitive):
        G = np.asarray(gram, dtype=np.int64)
        x, ok = _first_match_nb(G, np.int64(bound), np.int64(target), bool(primitive))
        return tuple(int(v) for v in x) if ok else None

    def all_matches_numba(gram, bound, target, linear):
        G = np.asarray(gram, dtype=np.int64)
        w = np.asarray(linear, dtype=np.int64)
        rows = _all_matches_nb(G, np.int64(bound), np.int64(target), w)
        return [tuple(int(v) for v in row) for row in rows]


_FIRST = {"numpy": first_match_numpy, "python": first_match_python}
_ALL = {"numpy": all_matches_numpy, "python": all_matches_python}
if HAVE_NUMBA:
    _FIRST["numba"] = first_match_numba
    _ALL["numba"] = all_matches_numba


def first_match(gram, bound, target, primitive=False, backend=None):
    """First nonzero box vector x (zigzag-lex order) with x.G.x == target."""
    if len(gram) == 0:
        return None
    backend = backend or BACKEND
    if abs(target) >= INT64_SAFE or not fits_int64(gram, bound):
        backend = "python"
    return _FIRST[backend](gram, bound, target, primitive)


def all_matches(gram, bound, target, linear, backend=None):
    """All nonzero box vectors with x.G.x == target and linear.x > 0, in order."""
    if len(gram) == 0:
        return []
    backend = backend or BACKEND
    if abs(target) >= INT64_SAFE or not fits_int64(gram, bound, linear):
        backend = "python"
    return _ALL[backend](gram, bound, target, linear)
