import random

import pytest

from hypermod.weights import (
    BottResult,
    TripleWeight,
    Weight2,
    bott_normalize,
    dominant_pairs,
    dominant_triples,
)


def test_is_dominant():
    assert Weight2(0, 0).is_dominant()
    assert Weight2(3, 1).is_dominant()
    assert not Weight2(1, 2).is_dominant()


def test_dual():
    assert Weight2(0, 0).dual() == Weight2(0, 0)
    assert Weight2(3, 1).dual() == Weight2(-1, -3)
    assert Weight2(5, -2).dual().dual() == Weight2(5, -2)


def test_fourier_examples():
    assert Weight2(0, 0).fourier() == Weight2(4, 4)
    assert Weight2(3, 3).fourier() == Weight2(1, 1)
    assert Weight2(2, 2).fourier() == Weight2(2, 2)


def test_bott_normalize_cases():
    assert bott_normalize(Weight2(4, 0)) == BottResult(1, Weight2(4, 0))
    assert bott_normalize(Weight2(0, 1)).sign == 0
    assert bott_normalize(Weight2(0, 2)) == BottResult(-1, Weight2(1, 1))


@pytest.mark.parametrize("seed", range(3))
def test_involutions_and_fourier_dual_relation(seed):
    rng = random.Random(seed)
    for _ in range(200):
        w = Weight2(rng.randint(-50, 50), rng.randint(-50, 50))
        assert w.dual().dual() == w
        assert w.fourier().fourier() == w
        assert w.fourier() == w.dual().shift(4)


def test_bott_sign_zero_exactly_on_the_tie_line():
    for a in range(-6, 7):
        for b in range(-6, 7):
            result = bott_normalize(Weight2(a, b))
            if b == a + 1:
                assert result.sign == 0
            else:
                assert result.sign != 0
                assert result.normalized.is_dominant()


def test_triple_weight_ordering_is_lexicographic_on_entries():
    a = TripleWeight.of(0, 0, 0, 0, 0, 1)
    b = TripleWeight.of(0, 0, 0, 0, 1, 0)
    assert a < b
    assert sorted([b, a]) == [a, b]


def test_triple_weight_json_round_trip():
    w = TripleWeight.of(3, 1, 2, 2, 2, 2)
    assert TripleWeight.from_lists(w.to_lists()) == w
    with pytest.raises(ValueError):
        TripleWeight.from_lists([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        TripleWeight.from_lists([[1, "x"], [3, 4], [5, 6]])


def test_dominant_iterators():
    pairs = list(dominant_pairs(-1, 1))
    assert pairs == [
        Weight2(-1, -1),
        Weight2(0, -1),
        Weight2(0, 0),
        Weight2(1, -1),
        Weight2(1, 0),
        Weight2(1, 1),
    ]
    triples = list(dominant_triples(0, 1))
    assert len(triples) == 27
    assert triples == sorted(triples)
