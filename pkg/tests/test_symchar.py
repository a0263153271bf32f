import random
from math import factorial

import pytest

from hypermod.symchar import (
    ConjClass,
    character_value,
    class_size,
    conjugacy_classes,
    kron_invariant_dim,
    partitions,
    schur_dim_gl2,
)
from hypermod.weights import Weight2


def hook_length_dim(lam):
    """Independent dimension oracle via the hook length formula."""
    if not lam:
        return 1
    cols = [0] * lam[0]
    for row in lam:
        for j in range(row):
            cols[j] += 1
    num = factorial(sum(lam))
    for i, row in enumerate(lam):
        for j in range(row):
            num //= row - j + cols[j] - i - 1
    return num


def test_partitions_enumeration_lexicographic():
    assert list(partitions(4)) == [
        (1, 1, 1, 1),
        (2, 1, 1),
        (2, 2),
        (3, 1),
        (4,),
    ]
    assert list(partitions(0)) == [()]


def test_class_sizes_sum_to_group_order():
    for d in range(9):
        assert sum(c.size for c in conjugacy_classes(d)) == factorial(d)


def test_class_size_formula():
    assert class_size((2, 1, 1)) == 6
    assert class_size((4,)) == 6
    assert conjugacy_classes(4)[0] == ConjClass((1, 1, 1, 1), 1)


def test_character_examples():
    for d in range(1, 8):
        for ct in partitions(d):
            assert character_value((d,), ct) == 1
    assert character_value((1, 1), (2,)) == -1
    assert character_value((2, 1), (1, 1, 1)) == 2


def test_character_size_mismatch_rejected():
    with pytest.raises(ValueError, match="sizes differ"):
        character_value((2, 1), (2, 2))


def test_dimension_matches_hook_length_formula():
    for d in range(9):
        identity = (1,) * d
        for lam in partitions(d):
            assert character_value(lam, identity) == hook_length_dim(lam)


def test_row_orthogonality():
    # sum over classes of |class| * chi_lam * chi_mu equals d! * [lam == mu]
    for d in range(1, 9):
        classes = conjugacy_classes(d)
        shapes = list(partitions(d))
        for lam in shapes:
            for mu in shapes:
                total = sum(
                    c.size * character_value(lam, c.cycle_type) * character_value(mu, c.cycle_type)
                    for c in classes
                )
                assert total == (factorial(d) if lam == mu else 0)


def test_column_orthogonality_at_identity():
    # sum over shapes of chi(c) * dim equals 0 off the identity class
    for d in range(2, 9):
        shapes = list(partitions(d))
        identity = (1,) * d
        for c in conjugacy_classes(d):
            total = sum(
                character_value(lam, c.cycle_type) * character_value(lam, identity)
                for lam in shapes
            )
            assert total == (factorial(d) // c.size if c.cycle_type == identity else 0)


def test_kron_examples():
    assert kron_invariant_dim((2,), (2,), (2,)) == 1
    assert kron_invariant_dim((1, 1), (1, 1), (2,)) == 1
    assert kron_invariant_dim((1, 1), (1, 1), (1, 1)) == 0
    assert kron_invariant_dim((2, 2), (2, 2), (2, 2)) == 1


def test_kron_symmetry_under_argument_permutations():
    rng = random.Random(7)
    for _ in range(25):
        d = rng.randint(1, 7)
        shapes = list(partitions(d))
        lam, mu, nu = (rng.choice(shapes) for _ in range(3))
        values = {
            kron_invariant_dim(*triple)
            for triple in [
                (lam, mu, nu),
                (lam, nu, mu),
                (mu, lam, nu),
                (mu, nu, lam),
                (nu, lam, mu),
                (nu, mu, lam),
            ]
        }
        assert len(values) == 1


def test_kron_with_trivial_factor_detects_equality():
    for d in range(1, 9):
        shapes = list(partitions(d))
        for lam in shapes:
            for mu in shapes:
                assert kron_invariant_dim(lam, mu, (d,)) == (1 if lam == mu else 0)


def test_schur_dim_gl2():
    assert schur_dim_gl2(Weight2(0, 0)) == 1
    assert schur_dim_gl2(Weight2(2, 0)) == 3
    assert schur_dim_gl2(Weight2(4, 4)) == 1
    with pytest.raises(ValueError):
        schur_dim_gl2(Weight2(1, 2))


def test_degree_cap_enforced():
    with pytest.raises(ValueError, match="cap"):
        character_value((17,), (17,))
