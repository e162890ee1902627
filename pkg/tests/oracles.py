"""Independent brute-force oracles.  Nothing here imports k3lattice internals."""
import itertools
from fractions import Fraction


def qf(G, x, y=None):
    y = x if y is None else y
    return sum(x[i] * G[i][j] * y[j] for i in range(len(x)) for j in range(len(x)))


def zigzag_key(v):
    # 0 < 1 < -1 < 2 < -2 < ...
    return tuple((abs(c), c < 0) for c in v)


def box(rank, bound):
    vs = [v for v in itertools.product(range(-bound, bound + 1), repeat=rank) if any(v)]
    return sorted(vs, key=zigzag_key)


def brute_first(G, bound, target, primitive=False):
    from math import gcd
    for v in box(len(G), bound):
        if qf(G, v) == target and (not primitive or gcd(*v) == 1):
            return v
    return None


def brute_minus_two(G, ample, bound):
    return [v for v in box(len(G), bound) if qf(G, v) == -2 and qf(G, ample, v) > 0]


def leibniz_det(M):
    n = len(M)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        p = 1
        for i in range(n):
            p *= M[i][perm[i]]
        total += -p if inv % 2 else p
    return total


def ldl_inertia(M):
    """Inertia by exact symmetric Gaussian elimination over Q (with 2x2 pivots as congruences)."""
    A = [[Fraction(v) for v in row] for row in M]
    n = len(A)
    pos = neg = zero = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if A[i][i] != 0), None)
        if piv is None:
            pair_ = next(((i, j) for i in active for j in active if i < j and A[i][j] != 0), None)
            if pair_ is None:
                zero += len(active)
                break
            i, j = pair_
            # replace basis vector i by e_i + e_j: congruence, makes A[i][i] = 2 A[i][j] != 0
            for k in range(n):
                A[i][k] += A[j][k]
            for k in range(n):
                A[k][i] += A[k][j]
            piv = i
        d = A[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        rest = [i for i in active if i != piv]
        for i in rest:
            f = A[i][piv] / d
            for k in rest:
                A[i][k] -= f * A[piv][k]
        for i in rest:
            A[i][piv] = A[piv][i] = Fraction(0)
        active = rest
    return pos, neg, zero
