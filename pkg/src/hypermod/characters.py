"""Graded-character multiplicity queries for the named equivariant modules.

The polynomial ring S on the tensor space, its symmetric-algebra dual SymV,
the determinant-twisted module E, the localization S_h at the hyperdeterminant
and its square-root twist are all queried pointwise: a query never materializes
more of a character than the weights it is asked about.

Localizations are limits of shifted multiplicities.  The limit is resolved by
a stabilization rule (three consecutive shift parameters must agree, starting
past an offset scaled to the queried weight) with a hard cap that turns any
misunderstanding of the limit into a loud failure instead of a wrong number.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

from .errors import StabilizationError
from .multiplicities import TwoRowTriple, _closed_form
from .weights import TripleWeight, dominant_triples

STABILIZATION_STEP = 8
STABILIZATION_CAP = 512

CHARACTER_IDS = ("S", "SymV", "E", "S_h", "S_h_sqrt")

GLClass = dict[TripleWeight, int]


def stabilized_limit(evaluate: Callable[[int], int], offset: int) -> int:
    """Value of ``evaluate(r)`` for large r, detected by three consecutive
    agreements starting at ``offset + STABILIZATION_STEP``; retries in steps of
    STABILIZATION_STEP and aborts past STABILIZATION_CAP."""
    r = offset + STABILIZATION_STEP
    while r <= STABILIZATION_CAP:
        v = evaluate(r)
        if v == evaluate(r + 1) == evaluate(r + 2):
            return v
        r += STABILIZATION_STEP
    raise StabilizationError(f"stabilization not reached by r = {STABILIZATION_CAP}")


def _sym_mult(w: TripleWeight) -> int:
    """Multiplicity in the symmetric algebra of the 8-dim space: nonzero only
    on triples of two-row partitions of a common size."""
    lam, mu, nu = w
    if not (lam.a >= lam.b >= 0 and mu.a >= mu.b >= 0 and nu.a >= nu.b >= 0):
        return 0
    d = lam.a + lam.b
    if d != mu.a + mu.b or d != nu.a + nu.b:
        return 0
    return _closed_form(d, max(lam.b, mu.b, nu.b), lam.b + mu.b + nu.b)


def mult_S(w: TripleWeight) -> int:
    """Multiplicity in the polynomial ring S; its weights are dual (negative)."""
    return _sym_mult(w.dual())


def mult_SymV(w: TripleWeight) -> int:
    return _sym_mult(w)


def mult_E(w: TripleWeight) -> int:
    """SymV twisted by the determinant weight: query at w - (4,4) per factor."""
    return _sym_mult(w.shift(-4))


@lru_cache(maxsize=None)
def mult_Sh(w: TripleWeight) -> int:
    """Multiplicity in the localization of S at the hyperdeterminant, as the
    stabilized value of S-multiplicities shifted by the degree of h^-r."""
    return stabilized_limit(lambda r: mult_S(w.shift(-2 * r)), w.max_abs_entry())


def mult_Sh_sqrt(w: TripleWeight) -> int:
    """Square-root twist of the localization; the twist has weight (-1,-1)^3."""
    return mult_Sh(w.shift(1))


_CHARACTER_FNS = {
    "S": mult_S,
    "SymV": mult_SymV,
    "E": mult_E,
    "S_h": mult_Sh,
    "S_h_sqrt": mult_Sh_sqrt,
}


def character_fn(name: str) -> Callable[[TripleWeight], int]:
    try:
        return _CHARACTER_FNS[name]
    except KeyError:
        raise ValueError(
            f"unknown character {name!r}; expected one of {', '.join(CHARACTER_IDS)}"
        )


def dump_window(name: str, lo: int, hi: int) -> GLClass:
    """All nonzero multiplicities of a named character over the box of
    dominant triples with entries in [lo, hi], in deterministic key order."""
    if lo > hi:
        raise ValueError("empty window: lo > hi")
    fn = character_fn(name)
    out: GLClass = {}
    for w in dominant_triples(lo, hi):
        value = fn(w)
        if value:
            out[w] = value
    return out
