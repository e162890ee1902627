import random

import pytest
from hypothesis import given, settings, strategies as st

from k3lattice.lattice import (
    IntegralLattice,
    LatticeInputError,
    charpoly,
    discriminant,
    hodge_index_valid,
    is_primitive,
    orthogonal_sum,
    pair,
    signature,
    sublattice_gram,
)
from k3lattice.density import random_unimodular, transform
from oracles import box, ldl_inertia, leibniz_det


def sym_matrices(max_rank=4, lo=-9, hi=9):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_rank))
        G = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                G[i][j] = G[j][i] = draw(st.integers(lo, hi))
        return G
    return build()


K9 = IntegralLattice([[4, 9], [9, 8]], ["f4", "f8"])


def test_pair_examples():
    assert pair(K9, (1, 0), (0, 1)) == 9
    assert pair(K9, (0, 0), (3, -7)) == 0
    assert pair(IntegralLattice([[2, 0], [0, -2]]), (1, 1), (1, 1)) == 0


def test_pair_dimension_mismatch():
    with pytest.raises(LatticeInputError):
        pair(K9, (1, 0, 0), (1, 0))


def test_constructor_validation():
    with pytest.raises(LatticeInputError, match="symmetric"):
        IntegralLattice([[1, 2], [3, 4]])
    with pytest.raises(LatticeInputError, match="distinct"):
        IntegralLattice([[1, 0], [0, 1]], ["a", "a"])
    with pytest.raises(LatticeInputError, match="labels"):
        IntegralLattice([[1]], ["a", "b"])
    with pytest.raises(LatticeInputError, match="integer"):
        IntegralLattice([[1.5]])


@pytest.mark.parametrize("gram, expected", [
    ([[4, 9], [9, 8]], (1, 1, 0)),
    ([[2, 0], [0, -2]], (1, 1, 0)),
    ([[0]], (0, 0, 1)),
    ([[1, 1], [1, 1]], (1, 0, 1)),
    ([[0, 1], [1, 0]], (1, 1, 0)),
    ([[-2, 1, 0], [1, -2, 1], [0, 1, -2]], (0, 3, 0)),
])
def test_signature_examples(gram, expected):
    assert tuple(signature(IntegralLattice(gram))) == expected


def test_discriminant_examples():
    assert discriminant(IntegralLattice([[4, 8], [8, 8]])) == -32
    assert discriminant(IntegralLattice([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 1
    assert discriminant(IntegralLattice([[4]])) == 4


def test_orthogonal_sum_examples():
    assert orthogonal_sum(IntegralLattice([[4]]), IntegralLattice([[-2]])).gram == ((4, 0), (0, -2))
    L = IntegralLattice([[2, 1], [1, 2]])
    assert orthogonal_sum(L, IntegralLattice([])) == L
    assert orthogonal_sum(L, IntegralLattice([[-2]])).gram == ((2, 1, 0), (1, 2, 0), (0, 0, -2))


def test_orthogonal_sum_label_collision():
    a = IntegralLattice([[2]], ["x"])
    s = orthogonal_sum(a, a)
    assert s.labels == ("x", "x_2")


def test_sublattice_gram_examples():
    assert sublattice_gram(K9, [(1, 0), (0, 1)]).gram == K9.gram
    assert sublattice_gram(K9, [(1, 1)]).gram == ((30,),)
    twice = sublattice_gram(K9, [(2, -1), (2, -1)])
    assert twice.rank == 2 and discriminant(twice) == 0


def test_is_primitive():
    assert not is_primitive((2, 4))
    assert is_primitive((1, 1))
    assert is_primitive((6, 10, 15))
    with pytest.raises(LatticeInputError):
        is_primitive((0, 0))


def test_hodge_index_examples():
    assert hodge_index_valid(K9)
    assert not hodge_index_valid(IntegralLattice([[2, 0], [0, 2]]))
    assert hodge_index_valid(IntegralLattice([[2]]))


@given(sym_matrices())
def test_signature_matches_ldl_oracle(G):
    assert tuple(signature(IntegralLattice(G))) == ldl_inertia(G)


@given(sym_matrices(max_rank=5))
def test_discriminant_matches_leibniz(G):
    assert discriminant(IntegralLattice(G)) == leibniz_det(G)


@given(sym_matrices(max_rank=5))
def test_charpoly_constant_term_is_det(G):
    c = charpoly(G)
    assert (-1) ** len(G) * c[0] == leibniz_det(G)
    assert c[-2] == -sum(G[i][i] for i in range(len(G)))


@given(sym_matrices(), st.data())
def test_pair_bilinear_symmetric(G, data):
    L = IntegralLattice(G)
    vec = st.tuples(*[st.integers(-50, 50)] * L.rank)
    x, y, z = data.draw(vec), data.draw(vec), data.draw(vec)
    a, b = data.draw(st.integers(-20, 20)), data.draw(st.integers(-20, 20))
    assert pair(L, x, y) == pair(L, y, x)
    lhs = pair(L, tuple(a * xi + b * yi for xi, yi in zip(x, y)), z)
    assert lhs == a * pair(L, x, z) + b * pair(L, y, z)


@given(sym_matrices(3), sym_matrices(3))
def test_disc_multiplicative(G1, G2):
    L1, L2 = IntegralLattice(G1), IntegralLattice(G2)
    assert discriminant(orthogonal_sum(L1, L2)) == discriminant(L1) * discriminant(L2)


@given(sym_matrices(), st.integers(0, 2**32))
def test_signature_basis_invariant(G, seed):
    U, _ = random_unimodular(random.Random(seed), len(G), steps=10, spread=3)
    assert signature(IntegralLattice(transform(G, U))) == signature(IntegralLattice(G))


@given(sym_matrices())
def test_sublattice_of_basis_is_gram(G):
    L = IntegralLattice(G)
    basis = [L.basis_vector(i) for i in range(L.rank)]
    assert sublattice_gram(L, basis).gram == L.gram


@given(st.integers(-30, 30), st.integers(-30, 30), st.integers(-30, 30))
@settings(max_examples=25)
def test_rank2_hodge_shape(a, b, c):
    L = IntegralLattice([[a, b], [b, c]])
    if a * c - b * b < 0:
        # an indefinite binary form always has signature (1, 1)
        assert hodge_index_valid(L)
        assert any(pair(L, v, v) > 0 for v in box(2, 62))


def test_big_entries_stay_exact():
    k = 10**30
    L = IntegralLattice([[4, k], [k, 8]])
    assert discriminant(L) == 32 - k * k
    assert tuple(signature(L)) == (1, 1, 0)
