import pytest
from hypothesis import given, strategies as st

from k3lattice.lattice import IntegralLattice, LatticeInputError, discriminant, pair
from k3lattice.quadrep import (
    SearchStatus,
    beauville_zero_iff_2m2,
    gauss_reduce_binary,
    isotropic_search,
    minus_two_classes,
    represent,
)
from oracles import brute_first, brute_minus_two

K9 = IntegralLattice([[4, 9], [9, 8]], ["f4", "f8"])
HYP = IntegralLattice([[2, 0], [0, -2]])


def test_represent_examples():
    v = represent(IntegralLattice([[2]]), 2, 1)
    assert v.status is SearchStatus.FOUND and v.witness == (1,)
    assert represent(IntegralLattice([[4]]), 8, 10).status is SearchStatus.NOT_FOUND
    # frozen from the exhaustive box oracle: 2a^2 + 9ab + 4b^2 = -1 has no solution
    assert brute_first(K9.gram, 10, -2) is None
    v = represent(K9, -2, 10)
    assert not v.found and v.witness is None and v.bound_used == 10


def test_represent_rejects_bad_bound():
    with pytest.raises(LatticeInputError):
        represent(HYP, 0, 0)


def test_isotropic_examples():
    assert isotropic_search(HYP, 1).witness == (1, 1)
    assert not isotropic_search(IntegralLattice([[4, 0], [0, -2]]), 50).found
    assert isotropic_search(IntegralLattice([[0]]), 1).witness == (1,)


def test_isotropic_skips_imprimitive():
    # (2, 0) and friends are isotropic for the zero form but not primitive
    v = isotropic_search(IntegralLattice([[0, 0], [0, 0]]), 3)
    assert v.witness == (0, 1)
    # 9x^2 - y^2: primitive witness (1, 3)
    assert isotropic_search(IntegralLattice([[9, 0], [0, -1]]), 6).witness == (1, 3)


@st.composite
def forms(draw, max_rank=3):
    n = draw(st.integers(1, max_rank))
    G = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            G[i][j] = G[j][i] = draw(st.integers(-8, 8))
    return IntegralLattice(G)


@given(forms(), st.integers(-20, 20), st.integers(1, 4))
def test_represent_matches_oracle(L, target, bound):
    v = represent(L, target, bound)
    assert v.witness == brute_first(L.gram, bound, target)
    if v.found:
        assert pair(L, v.witness, v.witness) == target


@given(forms(), st.integers(-20, 20), st.integers(1, 3), st.integers(0, 3))
def test_represent_monotone_in_bound(L, target, bound, extra):
    from oracles import zigzag_key
    a = represent(L, target, bound)
    b = represent(L, target, bound + extra)
    if a.found:
        assert b.found and zigzag_key(b.witness) <= zigzag_key(a.witness)


@given(st.integers(1, 20), st.integers(-5, 5), st.integers(1, 20), st.integers(1, 5))
def test_definite_forms_never_isotropic(a, b, c, bound):
    if a * c - b * b <= 0:
        return
    assert not isotropic_search(IntegralLattice([[a, b], [b, c]]), bound).found
    assert not isotropic_search(IntegralLattice([[-a, -b], [-b, -c]]), bound).found


def _check_reduction(L):
    R, U = gauss_reduce_binary(L)
    (p, q), (r, s) = U
    assert p * s - q * r == 1
    G = L.gram
    UtGU = [[sum(U[k][i] * G[k][l] * U[l][j] for k in range(2) for l in range(2)) for j in range(2)]
            for i in range(2)]
    assert [list(row) for row in R.gram] == UtGU
    assert discriminant(R) == discriminant(L)
    return R, U


def test_gauss_reduce_examples():
    R, U = _check_reduction(HYP)
    assert R == HYP and U == ((1, 0), (0, 1))
    R, _ = _check_reduction(K9)
    assert discriminant(R) == -49
    (a, b), (_, c) = R.gram
    assert abs(2 * b) <= abs(a) <= abs(c)
    R, _ = _check_reduction(IntegralLattice([[8, 4], [4, 4]]))
    assert abs(R.gram[0][1]) < 4 and discriminant(R) == 16


def test_gauss_reduce_rank_check():
    with pytest.raises(LatticeInputError):
        gauss_reduce_binary(IntegralLattice([[1]]))


@given(st.integers(-40, 40), st.integers(-40, 40), st.integers(-40, 40), st.data())
def test_gauss_reduce_properties(a, b, c, data):
    L = IntegralLattice([[a, b], [b, c]])
    R, U = _check_reduction(L)
    (ra, rb), (_, rc) = R.gram
    if ra != 0:
        assert abs(2 * rb) <= abs(ra) <= abs(rc)
    elif rb != 0:
        assert abs(rc) <= abs(rb)
    else:
        assert discriminant(L) == 0
    # q_L(Ux) = q_R(x)
    x = data.draw(st.tuples(st.integers(-9, 9), st.integers(-9, 9)))
    Ux = (U[0][0] * x[0] + U[0][1] * x[1], U[1][0] * x[0] + U[1][1] * x[1])
    assert pair(L, Ux, Ux) == pair(R, x, x)


def test_minus_two_examples():
    # oracle: C = (0, +-1) square to -2 but are orthogonal to the ample class
    assert brute_minus_two(HYP.gram, (1, 0), 5) == []
    assert minus_two_classes(HYP, (1, 0), 5) == []
    assert minus_two_classes(IntegralLattice([[4]]), (1,), 10) == []
    assert brute_minus_two(K9.gram, (1, 0), 20) == []
    assert minus_two_classes(K9, (1, 0), 20) == []


def test_minus_two_nonempty():
    k11 = IntegralLattice([[4, 11], [11, 8]])
    assert minus_two_classes(k11, (1, 0), 30) == brute_minus_two(k11.gram, (1, 0), 30) == [(5, -1)]


def test_minus_two_requires_positive_ample():
    with pytest.raises(LatticeInputError):
        minus_two_classes(HYP, (0, 1), 3)


@given(forms(), st.integers(1, 3), st.data())
def test_minus_two_matches_oracle(L, bound, data):
    ample = data.draw(st.tuples(*[st.integers(-3, 3)] * L.rank))
    if pair(L, ample, ample) <= 0:
        return
    got = minus_two_classes(L, ample, bound)
    assert got == brute_minus_two(L.gram, ample, bound)
    assert len(set(got)) == len(got)


def test_zero_iff_examples():
    iso, surf, ok = beauville_zero_iff_2m2(IntegralLattice([[2]]), 50)
    assert iso.witness == (1, 1) and surf.witness == (1,) and ok
    iso, surf, ok = beauville_zero_iff_2m2(IntegralLattice([[4]]), 50)
    assert not iso.found and not surf.found and ok
    res = beauville_zero_iff_2m2(IntegralLattice([[8]]), 50)
    assert res.beauville_side.witness == (1, 2) and res.m == 2 and res.consistent


@pytest.mark.parametrize("m", range(1, 11))
def test_zero_iff_degree_2m2(m):
    res = beauville_zero_iff_2m2(IntegralLattice([[2 * m * m]]), m)
    assert res.beauville_side.witness == (1, m)
    assert res.consistent


def test_zero_iff_reports_disagreement_honestly():
    # bound 1 cannot reach (1, 2) on [[8]] + [-2], but 8 = 2*2^2 is reached
    res = beauville_zero_iff_2m2(IntegralLattice([[8]]), 1)
    assert not res.beauville_side.found and res.surface_side.found
    assert not res.consistent


def test_zero_iff_isotropic_surface_counts_as_m0():
    res = beauville_zero_iff_2m2(HYP, 3)
    assert res.m == 0 and res.consistent
