from math import comb

import pytest

from hypermod import characters
from hypermod.multiplicities import two_row_pairs
from hypermod.symchar import kron_invariant_dim
from hypermod.weights import TripleWeight, dominant_triples

S = characters.mult_S
SYMV = characters.mult_SymV
E = characters.mult_E
SH = characters.mult_Sh
SHS = characters.mult_Sh_sqrt


def diag(a, b=None):
    return TripleWeight.diag(a, a if b is None else b)


def test_mult_S_examples():
    assert S(diag(0)) == 1
    assert S(TripleWeight.of(0, -1, 0, -1, 0, -1)) == 1
    assert S(diag(2)) == 0


def test_mult_SymV_examples():
    assert SYMV(diag(0)) == 1
    assert SYMV(TripleWeight.of(4, 0, 4, 0, 4, 0)) == 1
    assert SYMV(diag(1)) == 0


def test_mult_E_examples():
    assert E(diag(4)) == 1
    for a in range(4):
        assert E(diag(a)) == 0
    assert E(TripleWeight.of(3, 1, 2, 2, 2, 2)) == 0


def test_mult_Sh_examples():
    assert SH(diag(2)) == 1
    assert SH(diag(1)) == 0
    assert SH(TripleWeight.of(3, 1, 2, 2, 2, 2)) == 0


def test_mult_Sh_sqrt_examples():
    assert SHS(diag(1)) == 1
    assert SHS(TripleWeight.of(3, 1, 2, 2, 2, 2)) == 1
    assert SHS(diag(0)) == 0


def test_fourier_exchanges_S_and_E_on_a_window():
    for w in dominant_triples(-1, 5):
        assert E(w) == S(w.fourier())


def test_localization_contains_the_ring():
    for w in dominant_triples(-3, 1):
        assert SH(w) >= S(w)


def test_localization_layer_sum_on_a_window():
    # S_h multiplicities split as ring + middle layer + determinant twist
    from hypermod.simples import SimpleId, mult_simple

    for w in dominant_triples(-2, 4):
        assert S(w) + mult_simple(SimpleId.D5, w) + E(w) == SH(w)


def test_graded_dimensions_of_S_window():
    # the degree <= 2 slice of S: per-degree entry counts 1, 1, 4 and
    # dimensions 1, 8, 36
    window = characters.dump_window("S", -2, 0)
    by_degree = {0: [], 1: [], 2: []}
    for w, mult in window.items():
        d = -w.lam.size()
        assert mult > 0
        if d in by_degree:
            by_degree[d].append((w, mult))
    counts = {d: len(entries) for d, entries in by_degree.items()}
    assert counts == {0: 1, 1: 1, 2: 4}
    dims = {
        d: sum(
            mult
            * (w.lam.a - w.lam.b + 1)
            * (w.mu.a - w.mu.b + 1)
            * (w.nu.a - w.nu.b + 1)
            for w, mult in entries
        )
        for d, entries in by_degree.items()
    }
    assert dims == {0: 1, 1: 8, 2: comb(2 + 7, 7)}


def test_degree_two_entry_count_against_character_oracle():
    # independent recount of the degree-2 slice via the invariant oracle
    pairs = [(2,), (1, 1)]
    nonzero = [
        (lam, mu, nu)
        for lam in pairs
        for mu in pairs
        for nu in pairs
        if kron_invariant_dim(lam, mu, nu)
    ]
    assert len(nonzero) == 4


def test_dump_window_named_examples():
    assert characters.dump_window("E", 4, 4) == {TripleWeight.diag(4, 4): 1}
    assert characters.dump_window("S_h_sqrt", 0, 0) == {}


def test_dump_window_rejects_unknown_module_and_bad_box():
    with pytest.raises(ValueError, match="unknown character"):
        characters.dump_window("nope", 0, 1)
    with pytest.raises(ValueError, match="lo > hi"):
        characters.dump_window("S", 1, 0)


def test_degree_dimension_identity_for_SymV():
    for d in range(7):
        pairs = two_row_pairs(d)
        total = sum(
            SYMV(TripleWeight(lam, mu, nu))
            * (lam.a - lam.b + 1)
            * (mu.a - mu.b + 1)
            * (nu.a - nu.b + 1)
            for lam in pairs
            for mu in pairs
            for nu in pairs
        )
        assert total == comb(d + 7, 7)


def test_stabilization_is_shift_invariant():
    # localization multiplicities are invariant under the determinant-square
    # shift that defines them
    for w in dominant_triples(0, 3):
        assert SH(w) == SH(w.shift(-2))
