import random

import pytest

from k3lattice.density import K3Input, check_density_hypotheses, degree_to_m, random_hodge_instance
from k3lattice.lattice import IntegralLattice, LatticeInputError, hodge_index_valid, pair


def statuses(rep):
    return {c.id: c.status for c in rep.claims}


def test_all_pass_example():
    L = IntegralLattice([[8, 5], [5, 2]])
    rep = check_density_hypotheses(K3Input(L, (1, 0)), (0, 1))
    assert set(statuses(rep).values()) == {"pass"}
    assert rep["density.b.gram_determinant"].lhs == 16 - 25
    assert (rep["density.c.positivity"].lhs, rep["density.c.positivity"].rhs) == (50, 8)
    assert rep["density.d.star_square"].lhs == 42


def test_proportional_fails_determinant():
    L = IntegralLattice([[8]])
    rep = check_density_hypotheses(K3Input(L, (1,)), (1,))
    b = rep["density.b.gram_determinant"]
    assert b.status == "fail" and b.lhs == 0 and b.detail == "g proportional to f"


def test_quartic_octic_k9_example():
    L = IntegralLattice([[4, 9], [9, 8]], ["f4", "f8"])
    f8, g = (0, 1), (5, -1)
    assert pair(L, g, g) == 18
    rep = check_density_hypotheses(K3Input(L, f8), g)
    # frozen from direct pairing: <f,g> = 37, <g,g> = 18, m = 2
    assert rep["density.b.gram_determinant"].lhs == 8 * 18 - 37 ** 2 == -1225
    assert rep["density.c.positivity"].lhs == 2738
    assert rep["density.c.positivity"].rhs == 72
    assert rep["density.d.star_square"].lhs == 2666
    assert set(statuses(rep).values()) == {"pass"}


def test_degree_must_be_2m2():
    L = IntegralLattice([[4, 9], [9, 8]])
    with pytest.raises(LatticeInputError, match="2m\\^2"):
        check_density_hypotheses(K3Input(L, (1, 0)), (0, 1))
    assert degree_to_m(8) == 2 and degree_to_m(2) == 1 and degree_to_m(50) == 5


def test_g_must_have_positive_square():
    L = IntegralLattice([[8, 0], [0, -2]])
    with pytest.raises(LatticeInputError, match="positive"):
        check_density_hypotheses(K3Input(L, (1, 0)), (0, 1))


def test_input_validation():
    with pytest.raises(LatticeInputError):
        K3Input(IntegralLattice([[2, 0], [0, 2]]), (1, 0))
    with pytest.raises(LatticeInputError, match="even"):
        K3Input(IntegralLattice([[3, 0], [0, -2]]), (1, 0))
    with pytest.raises(LatticeInputError):
        K3Input(IntegralLattice([[8]]), (1,), n=1)


def test_report_is_recheckable():
    L = IntegralLattice([[8, 5], [5, 2]])
    assert check_density_hypotheses(K3Input(L, (1, 0)), (0, 1)).recheck()


def test_random_instances_are_valid():
    rng = random.Random(3)
    for _ in range(100):
        L, f, g, m = random_hodge_instance(rng)
        assert hodge_index_valid(L)
        assert pair(L, f, f) == 2 * m * m
        assert pair(L, g, g) > 0
        ff, fg, gg = pair(L, f, f), pair(L, f, g), pair(L, g, g)
        assert ff * gg != fg * fg
