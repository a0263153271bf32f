import random
from fractions import Fraction

import pytest

from hypermod.localcoh import OrbitId
from hypermod.orbits import (
    GroupElement,
    ORBIT_REPRESENTATIVES,
    Tensor222,
    act,
    act_composed,
    classify_orbit,
    flattening_ranks,
    hyperdet,
    isotropy_spot_checks,
    matrix_rank,
    orbit_dim,
    random_group_element,
    random_integer_tensor,
)


def test_hyperdet_examples():
    assert hyperdet(ORBIT_REPRESENTATIVES[OrbitId.O6]) == 1
    assert hyperdet(ORBIT_REPRESENTATIVES[OrbitId.O5]) == 0
    assert hyperdet(Tensor222.zero()) == 0


def test_flattening_rank_examples():
    assert flattening_ranks(Tensor222.basis(1, 1, 1)) == (1, 1, 1)
    assert flattening_ranks(ORBIT_REPRESENTATIVES[OrbitId.O122]) == (1, 2, 2)
    assert flattening_ranks(ORBIT_REPRESENTATIVES[OrbitId.O6]) == (2, 2, 2)


def test_classification_of_representatives():
    for orbit, rep in ORBIT_REPRESENTATIVES.items():
        assert classify_orbit(rep) is orbit


def test_orbit_dimensions():
    dims = [orbit_dim(rep) for rep in ORBIT_REPRESENTATIVES.values()]
    assert dims == [0, 4, 5, 5, 5, 7, 8]


def test_random_dense_tensor_lands_in_the_open_orbit():
    rng = random.Random(11)
    hits = 0
    for _ in range(50):
        t = random_integer_tensor(rng)
        if hyperdet(t) != 0:
            hits += 1
            assert classify_orbit(t) is OrbitId.O6
    assert hits > 25  # the open orbit is dense


def test_matrix_rank_exactness():
    third = Fraction(1, 3)
    rows = [[third, 2 * third], [third * 2, 4 * third]]
    assert matrix_rank(rows) == 1
    rows = [[third, 0], [0, third]]
    assert matrix_rank(rows) == 2


def test_tensor_json_round_trip():
    t = Tensor222.from_nested([[["1/2", 0], [0, 1]], [[2, "-3/4"], [0, 0]]])
    assert t[(0, 0, 0)] == Fraction(1, 2)
    assert t[(1, 0, 1)] == Fraction(-3, 4)
    assert Tensor222.from_nested(t.to_nested()) == t
    with pytest.raises(ValueError):
        Tensor222.from_nested([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        Tensor222.from_nested([[[1.5, 0], [0, 0]], [[0, 0], [0, 0]]])


def test_group_element_requires_invertible_factors():
    one, zero = Fraction(1), Fraction(0)
    singular = ((one, one), (one, one))
    identity = ((one, zero), (zero, one))
    with pytest.raises(ValueError, match="invertible"):
        GroupElement(singular, identity, identity)


def test_action_implementations_agree():
    rng = random.Random(3)
    for _ in range(30):
        g = random_group_element(rng)
        t = random_integer_tensor(rng)
        assert act(g, t) == act_composed(g, t)


def test_hyperdet_equivariance():
    rng = random.Random(5)
    for _ in range(60):
        g = random_group_element(rng)
        t = random_integer_tensor(rng)
        assert hyperdet(act(g, t)) == g.det_product() ** 2 * hyperdet(t)


def test_classification_is_orbit_constant():
    rng = random.Random(9)
    for _ in range(60):
        g = random_group_element(rng)
        t = random_integer_tensor(rng)
        assert classify_orbit(act(g, t)) is classify_orbit(t)


def test_orbit_dim_is_orbit_constant_on_representatives():
    rng = random.Random(13)
    for orbit, rep in ORBIT_REPRESENTATIVES.items():
        for _ in range(5):
            g = random_group_element(rng)
            assert orbit_dim(act(g, rep)) == orbit_dim(rep)


def test_hyperdet_vanishes_exactly_off_the_dense_orbit():
    rng = random.Random(17)
    for orbit, rep in ORBIT_REPRESENTATIVES.items():
        assert (hyperdet(rep) == 0) == (orbit is not OrbitId.O6)
    for _ in range(40):
        t = random_integer_tensor(rng)
        assert (hyperdet(t) == 0) == (classify_orbit(t) is not OrbitId.O6)


def test_isotropy_spot_checks_pass_and_are_seeded():
    report = isotropy_spot_checks(seed=0)
    assert report["passed"] and report["seed"] == 0
    assert len(report["checks"]) == 4


def test_specific_diagonal_stabilizer_sample():
    half = Fraction(1, 6)
    g = GroupElement(
        ((Fraction(2), Fraction(0)), (Fraction(0), Fraction(1))),
        ((Fraction(3), Fraction(0)), (Fraction(0), Fraction(1))),
        ((half, Fraction(0)), (Fraction(0), Fraction(1))),
    )
    v = ORBIT_REPRESENTATIVES[OrbitId.O6]
    assert act(g, v) == v
