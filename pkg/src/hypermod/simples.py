"""Catalog of the eight simple equivariant modules on the 2x2x2 tensor space.

Provides the witness-weight table, pointwise multiplicity oracles (exact where
determined, ``None`` where the stored theory genuinely leaves the value open),
composition series of the localization layers, and the two symmetry
permutations of the simples (Fourier transform and holonomic duality).

``None`` is a first-class answer for D1 and G6 on weights where the
determinant-twisted module E also lives: on those weights the Euler
characteristic mixes an undetermined copy of E into the count, so returning a
number would poison every sum rule built on top.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Optional

from . import characters
from .errors import InternalInconsistencyError
from .euler import euler_mult
from .symchar import kron_invariant_dim
from .weights import TripleWeight, Weight2


class SimpleId(str, Enum):
    E = "E"
    D0 = "E"  # alias: the origin-supported simple
    D1 = "D1"
    D122 = "D122"
    D212 = "D212"
    D221 = "D221"
    D5 = "D5"
    S = "S"
    G6 = "G6"


class ModuleId(str, Enum):
    """The simples together with the closed family of composite modules."""

    S = "S"
    E = "E"
    D1 = "D1"
    D122 = "D122"
    D212 = "D212"
    D221 = "D221"
    D5 = "D5"
    G6 = "G6"
    S_h = "S_h"
    S_h_sqrt = "S_h_sqrt"
    h_inv1 = "h_inv1"
    F = "F"
    Sh_mod_S = "Sh_mod_S"
    Shs_mod_G6 = "Shs_mod_G6"
    Zero = "Zero"


SIMPLE_MODULE_IDS = frozenset(ModuleId(s.value) for s in SimpleId)


def as_simple(m: ModuleId) -> SimpleId:
    return SimpleId(m.value)


def as_module(s: SimpleId) -> ModuleId:
    return ModuleId(s.value)


WITNESS_WEIGHTS: dict[SimpleId, TripleWeight] = {
    SimpleId.S: TripleWeight.diag(0, 0),
    SimpleId.G6: TripleWeight.diag(1, 1),
    SimpleId.D5: TripleWeight.diag(2, 2),
    SimpleId.D1: TripleWeight.diag(3, 3),
    SimpleId.E: TripleWeight.diag(4, 4),
    SimpleId.D122: TripleWeight.of(3, 1, 2, 2, 2, 2),
    SimpleId.D212: TripleWeight.of(2, 2, 3, 1, 2, 2),
    SimpleId.D221: TripleWeight.of(2, 2, 2, 2, 3, 1),
}

# Roots (with multiplicity) of the localization b-polynomial of the
# hyperdeterminant.  Stored data, not computed here: only the root set matters,
# it dictates which localization layers are nontrivial.
B_FUNCTION_ROOTS: dict[Fraction, int] = {
    Fraction(-1): 1,
    Fraction(-3, 2): 2,
    Fraction(-2): 1,
}


def witness_weight(s: SimpleId) -> TripleWeight:
    return WITNESS_WEIGHTS[s]


def witness_table() -> list[dict]:
    return [
        {"simple": s.value, "weight": WITNESS_WEIGHTS[s].to_lists()}
        for s in (SimpleId.S, SimpleId.G6, SimpleId.D5, SimpleId.D1, SimpleId.E,
                  SimpleId.D122, SimpleId.D212, SimpleId.D221)
    ]


def _rank_one_axis_mult(axis: Weight2, p: Weight2, q: Weight2) -> int:
    """Multiplicity oracle for a simple supported on a rank-one-flattening
    locus, with ``axis`` the distinguished factor.

    The module decomposes over the axis factor times the tensor square of the
    other two; the axis weight must lie in the cone a >= 3, b <= 1, and the
    companion four-row index is (a-2, 1, 1, b).  A determinant twist makes all
    indices genuine partitions before the invariant-dimension oracle runs.
    """
    if not (axis.a >= 3 and axis.b <= 1):
        return 0
    if axis.size() != p.size() or p.size() != q.size():
        return 0
    # ceil(-x/2) == -(x // 2) for ints
    t = max(0, -axis.b, -(p.b // 2), -(q.b // 2))
    four = (axis.a - 2 + t, 1 + t, 1 + t, axis.b + t)
    lam = tuple(x for x in four if x)
    pp = tuple(x for x in (p.a + 2 * t, p.b + 2 * t) if x)
    qq = tuple(x for x in (q.a + 2 * t, q.b + 2 * t) if x)
    return kron_invariant_dim(lam, pp, qq)


def mult_simple(s: SimpleId, w: TripleWeight) -> Optional[int]:
    """Multiplicity of a triple weight in a simple module, or ``None`` when the
    stored theory does not pin the value down (D1/G6 on weights shared with E)."""
    if not w.is_dominant():
        raise ValueError("weight must be componentwise dominant")
    if s is SimpleId.S:
        return characters.mult_S(w)
    if s is SimpleId.E:
        return characters.mult_E(w)
    if s is SimpleId.D122:
        return _rank_one_axis_mult(w.lam, w.mu, w.nu)
    if s is SimpleId.D212:
        return _rank_one_axis_mult(w.mu, w.lam, w.nu)
    if s is SimpleId.D221:
        return _rank_one_axis_mult(w.nu, w.lam, w.mu)
    if s is SimpleId.D5:
        value = characters.mult_Sh(w) - characters.mult_S(w) - characters.mult_E(w)
        if value < 0:
            raise InternalInconsistencyError(
                f"middle localization layer negative at {w}"
            )
        return value
    if s is SimpleId.D1:
        if characters.mult_E(w) != 0:
            return None
        return euler_mult(w)
    if s is SimpleId.G6:
        return mult_simple(SimpleId.D1, w.fourier())
    raise ValueError(f"unknown simple {s!r}")


class CompositionSeries(NamedTuple):
    module: ModuleId
    layers: tuple[tuple[SimpleId, ...], ...]

    def factors(self) -> tuple[SimpleId, ...]:
        return tuple(s for layer in self.layers for s in layer)


_SERIES: dict[ModuleId, tuple[tuple[SimpleId, ...], ...]] = {
    ModuleId.S_h: ((SimpleId.S,), (SimpleId.D5,), (SimpleId.E,)),
    ModuleId.h_inv1: ((SimpleId.S,), (SimpleId.D5,)),
    ModuleId.Sh_mod_S: ((SimpleId.D5,), (SimpleId.E,)),
    ModuleId.S_h_sqrt: (
        (SimpleId.G6,),
        (SimpleId.D122, SimpleId.D212, SimpleId.D221),
        (SimpleId.D1,),
    ),
    ModuleId.F: ((SimpleId.G6,), (SimpleId.D122, SimpleId.D212, SimpleId.D221)),
    ModuleId.Shs_mod_G6: (
        (SimpleId.D122, SimpleId.D212, SimpleId.D221),
        (SimpleId.D1,),
    ),
}


def composition_series(m: ModuleId) -> CompositionSeries:
    """Bottom-to-top composition layers of the localization-family modules."""
    try:
        return CompositionSeries(m, _SERIES[m])
    except KeyError:
        raise ValueError(f"no stored composition series for module {m.value!r}")


_FOURIER = {
    SimpleId.S: SimpleId.E,
    SimpleId.E: SimpleId.S,
    SimpleId.G6: SimpleId.D1,
    SimpleId.D1: SimpleId.G6,
}


def fourier_on_simples(s: SimpleId) -> SimpleId:
    """The Fourier transform swaps (S, E) and (G6, D1) and fixes the rest."""
    return _FOURIER.get(s, s)


def duality_on_simples(s: SimpleId) -> SimpleId:
    """Holonomic duality fixes every simple."""
    return s
