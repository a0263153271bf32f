import pytest

from hypermod.euler import euler_mult, term_contributions
from hypermod.weights import TripleWeight


def test_named_values():
    assert euler_mult(TripleWeight.diag(3, 3)) == 1
    for a in range(3):
        assert euler_mult(TripleWeight.diag(a, a)) == 0
    for w in (
        TripleWeight.of(3, 1, 2, 2, 2, 2),
        TripleWeight.of(2, 2, 3, 1, 2, 2),
        TripleWeight.of(2, 2, 2, 2, 3, 1),
    ):
        assert euler_mult(w) == 0


def test_single_term_reduction_when_second_entries_are_small():
    # with every second entry below 4, only the all-second-slot summand can
    # survive: the other shifts leave a negative entry in partition position
    for w in (
        TripleWeight.diag(3, 3),
        TripleWeight.diag(2, 2),
        TripleWeight.of(3, 1, 2, 2, 2, 2),
    ):
        for r in (40, 41, 57):
            terms = term_contributions(w, r)
            assert all(v == 0 for slots, v in terms.items() if slots != (2, 2, 2))


def test_dominance_required():
    with pytest.raises(ValueError, match="dominant"):
        euler_mult(TripleWeight.of(0, 1, 0, 0, 0, 0))


def test_matches_fourier_route_through_the_localization_sum():
    # cross-check: the value at (5,5)^3 is forced to 1 by the square-root
    # localization sum rule (worked through the Fourier transform)
    assert euler_mult(TripleWeight.diag(5, 5)) == 1
    assert euler_mult(TripleWeight.of(-1, -1, -1, -1, -1, -1)) == 0
