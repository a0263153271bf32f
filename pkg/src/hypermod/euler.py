"""Euler-characteristic multiplicities of the pushforward from the rank-one
locus desingularization.

The desingularized rank-one locus is a line bundle over a product of three
projective lines; the alternating sum of the pushforward's cohomology has, in
each weight, a limit formula: an eight-term sum over which factor of each
weight gets the growing shift, each term normalized by the sorted-shift rule
and looked up in the symmetric-algebra character.  All eight terms are always
summed; vanishing arguments the analysis would use to prune terms are left to
the arithmetic itself, which doubles as a cross-check.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .characters import _sym_mult, stabilized_limit
from .weights import TripleWeight, Weight2, bott_normalize

_SLOTS = (1, 2)  # which entry of a pair receives the growing shift


def _shifted(x: Weight2, r: int, slot: int) -> Weight2:
    if slot == 1:
        return Weight2(x.a - 4 + r, x.b - 4)
    return Weight2(x.a - 4, x.b - 4 + r)


def term_contributions(w: TripleWeight, r: int) -> dict[tuple[int, int, int], int]:
    """The eight summands at shift parameter r, keyed by slot choice per factor.

    Each factor weight is shifted, normalized by the sorted-shift rule (sign 0
    kills the term), and the product of signs multiplies the symmetric-algebra
    multiplicity of the normalized triple.
    """
    out: dict[tuple[int, int, int], int] = {}
    for slots in product(_SLOTS, repeat=3):
        sign = 1
        normalized = []
        for x, slot in zip(w, slots):
            s, n = bott_normalize(_shifted(x, r, slot))
            if s == 0:
                sign = 0
                break
            sign *= s
            normalized.append(n)
        out[slots] = 0 if sign == 0 else sign * _sym_mult(TripleWeight(*normalized))
    return out


def _alternating_sum(w: TripleWeight, r: int) -> int:
    return -sum(term_contributions(w, r).values())


@lru_cache(maxsize=None)
def euler_mult(w: TripleWeight) -> int:
    """Stabilized Euler-characteristic multiplicity at a dominant triple."""
    if not w.is_dominant():
        raise ValueError("weight must be componentwise dominant")
    return stabilized_limit(lambda r: _alternating_sum(w, r), w.max_abs_entry())
