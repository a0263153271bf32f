"""Orbit-closure poset and the local-cohomology calculus.

Local cohomology with support in an orbit closure is, for this category, a
finite bookkeeping problem: a table of known rows plus three composition
rules (the support rule for modules living inside the support locus, the
degree-shift rule for the two quotient modules, and linearity over direct
sums).  The calculus composes stored facts and never invents a row; a query
outside the derivable domain raises instead of guessing.

One stored family deserves a note: the rows for the full-support simple with
the nontrivial local system (G6) over the three rank-one-flattening closures
are forced by the long exact sequence of ``0 -> G6 -> F -> sum of D_ijk -> 0``
together with the rows of F and of the D_ijk themselves; the resulting degree-1
term is the matching D_ijk.  These rows make the Euler identity for that
sequence hold at every one of the four relevant supports, and the whole table
is closed under iteration.
"""

from __future__ import annotations

from collections import Counter
from enum import Enum

from .errors import TableDomainError
from .simples import (
    SIMPLE_MODULE_IDS,
    ModuleId,
    as_simple,
    composition_series,
)

M = ModuleId


class OrbitId(str, Enum):
    O0 = "O0"
    O1 = "O1"
    O122 = "O122"
    O212 = "O212"
    O221 = "O221"
    O5 = "O5"
    O6 = "O6"


ORBIT_DIM: dict[OrbitId, int] = {
    OrbitId.O0: 0,
    OrbitId.O1: 4,
    OrbitId.O122: 5,
    OrbitId.O212: 5,
    OrbitId.O221: 5,
    OrbitId.O5: 7,
    OrbitId.O6: 8,
}

AMBIENT_DIM = 8


def codim(z: OrbitId) -> int:
    return AMBIENT_DIM - ORBIT_DIM[z]


# Orbits whose closure is contained in the closure of the key orbit.  The three
# dimension-5 orbits are pairwise incomparable; their closures meet in the
# closure of O1.
CLOSURE_CONTAINS: dict[OrbitId, frozenset[OrbitId]] = {
    OrbitId.O0: frozenset({OrbitId.O0}),
    OrbitId.O1: frozenset({OrbitId.O0, OrbitId.O1}),
    OrbitId.O122: frozenset({OrbitId.O0, OrbitId.O1, OrbitId.O122}),
    OrbitId.O212: frozenset({OrbitId.O0, OrbitId.O1, OrbitId.O212}),
    OrbitId.O221: frozenset({OrbitId.O0, OrbitId.O1, OrbitId.O221}),
    OrbitId.O5: frozenset(
        {OrbitId.O0, OrbitId.O1, OrbitId.O122, OrbitId.O212, OrbitId.O221, OrbitId.O5}
    ),
    OrbitId.O6: frozenset(OrbitId),
}

PROPER_ORBITS = (
    OrbitId.O0,
    OrbitId.O1,
    OrbitId.O122,
    OrbitId.O212,
    OrbitId.O221,
    OrbitId.O5,
)

# Support of each module, as the set of maximal orbits in it.
SUPPORT: dict[ModuleId, frozenset[OrbitId]] = {
    M.S: frozenset({OrbitId.O6}),
    M.G6: frozenset({OrbitId.O6}),
    M.E: frozenset({OrbitId.O0}),
    M.D1: frozenset({OrbitId.O1}),
    M.D122: frozenset({OrbitId.O122}),
    M.D212: frozenset({OrbitId.O212}),
    M.D221: frozenset({OrbitId.O221}),
    M.D5: frozenset({OrbitId.O5}),
    M.S_h: frozenset({OrbitId.O6}),
    M.S_h_sqrt: frozenset({OrbitId.O6}),
    M.h_inv1: frozenset({OrbitId.O6}),
    M.F: frozenset({OrbitId.O6}),
    M.Sh_mod_S: frozenset({OrbitId.O5}),
    M.Shs_mod_G6: frozenset({OrbitId.O122, OrbitId.O212, OrbitId.O221}),
    M.Zero: frozenset(),
}

LCRow = dict[int, Counter]

_D_OF_ORBIT = {OrbitId.O122: M.D122, OrbitId.O212: M.D212, OrbitId.O221: M.D221}

# Known rows that are not instances of the support or shift rules.
_STORED: dict[tuple[ModuleId, OrbitId], dict[int, tuple[ModuleId, ...]]] = {}


def _store(m: ModuleId, z: OrbitId, row: dict[int, tuple[ModuleId, ...]]) -> None:
    _STORED[(m, z)] = row


# Rows for the polynomial ring.
_store(M.S, OrbitId.O0, {8: (M.E,)})
_store(M.S, OrbitId.O1, {4: (M.D1,)})
_store(M.S, OrbitId.O5, {1: (M.Sh_mod_S,)})
for _z, _d in _D_OF_ORBIT.items():
    _store(M.S, _z, {3: (_d,), 5: (M.E,)})

# The rank-one-locus simple has cohomology only at the origin.
_store(M.D1, OrbitId.O0, {4: (M.E,)})

# Rows for the hypersurface simple.
_store(M.D5, OrbitId.O0, {1: (M.E,), 7: (M.E,)})
_store(M.D5, OrbitId.O1, {1: (M.E,), 3: (M.D1,)})
for _z, _d in _D_OF_ORBIT.items():
    _store(M.D5, _z, {1: (M.E,), 2: (_d,), 4: (M.E,)})

# Rows for the rank-one-flattening simples; their own orbit is covered by the
# support rule, every other proper support is stored here.
for _m in (M.D122, M.D212, M.D221):
    _store(_m, OrbitId.O0, {3: (M.E,), 5: (M.E,)})
    _store(_m, OrbitId.O1, {1: (M.D1,), 3: (M.E,)})
    for _z, _d in _D_OF_ORBIT.items():
        if _d is not _m:
            _store(_m, _z, {1: (M.D1,), 3: (M.E,)})

# Rows for the full-support simple with nontrivial local system.
_store(M.G6, OrbitId.O0, {4: (M.E, M.E, M.E), 6: (M.E, M.E)})
_store(M.G6, OrbitId.O1, {2: (M.D1, M.D1), 4: (M.E, M.E, M.E)})
_store(M.G6, OrbitId.O5, {1: (M.Shs_mod_G6,)})
for _z, _d in _D_OF_ORBIT.items():
    _store(M.G6, _z, {1: (_d,), 2: (M.D1,), 4: (M.E, M.E)})

# The two localizations have no cohomology supported in any proper closure.
for _z in PROPER_ORBITS:
    _store(M.S_h, _z, {})
    _store(M.S_h_sqrt, _z, {})
    _store(M.h_inv1, _z, {1: (M.E,)})

_store(M.F, OrbitId.O0, {5: (M.E,)})
for _z in (OrbitId.O1, OrbitId.O122, OrbitId.O212, OrbitId.O221, OrbitId.O5):
    _store(M.F, _z, {1: (M.D1,)})

_SHIFT_BASE = {M.Sh_mod_S: M.S, M.Shs_mod_G6: M.G6}


def supported_inside(m: ModuleId, z: OrbitId) -> bool:
    return SUPPORT[m] <= CLOSURE_CONTAINS[z]


def lc(m: ModuleId, z: OrbitId) -> LCRow:
    """Local cohomology of a module with support in an orbit closure, as a map
    degree -> multiset of modules.  Raises ``TableDomainError`` off-domain."""
    m, z = ModuleId(m), OrbitId(z)
    if m is M.Zero:
        return {}
    if supported_inside(m, z):
        return {0: Counter({m: 1})}
    stored = _STORED.get((m, z))
    if stored is not None:
        return {deg: Counter(mods) for deg, mods in stored.items() if mods}
    base = _SHIFT_BASE.get(m)
    if base is not None:
        # Quotient by a full-support submodule with vanishing local cohomology:
        # every degree drops by one.
        return {deg - 1: mods.copy() for deg, mods in lc(base, z).items()}
    raise TableDomainError(
        f"local cohomology of {m.value} with support {z.value} "
        "is not derivable from the stored tables"
    )


def iterated_lc(m: ModuleId, supports: list[OrbitId]) -> dict[tuple[int, ...], Counter]:
    """Fully expanded iteration of local cohomology, innermost support first.

    Keys are tuples of degrees in application order; values are multisets of
    modules.  Multisets expand linearly: the row of a sum is the degreewise
    union of rows.
    """
    state: dict[tuple[int, ...], Counter] = {(): Counter({ModuleId(m): 1})}
    for z in supports:
        nxt: dict[tuple[int, ...], Counter] = {}
        for degrees, mods in state.items():
            for mod, mult in mods.items():
                for deg, row_mods in lc(mod, z).items():
                    key = degrees + (deg,)
                    bucket = nxt.setdefault(key, Counter())
                    for out_mod, out_mult in row_mods.items():
                        bucket[out_mod] += mult * out_mult
        state = nxt
    return state


def grothendieck_class(row: LCRow) -> Counter:
    """Alternating-sum class of a row, flattened to simple composition factors."""
    total: Counter = Counter()
    for deg, mods in row.items():
        sign = -1 if deg % 2 else 1
        for mod, mult in mods.items():
            if mod is M.Zero:
                continue
            if mod in SIMPLE_MODULE_IDS:
                total[as_simple(mod)] += sign * mult
            else:
                for factor in composition_series(mod).factors():
                    total[factor] += sign * mult
    return total


def ses_euler_identity(z: OrbitId) -> dict:
    """Euler identity of the sequence 0 -> G6 -> F -> sum of D_ijk -> 0 at z:
    class(F) must equal class(G6) + class(sum of D_ijk)."""
    chi_f = grothendieck_class(lc(M.F, z))
    chi_g6 = grothendieck_class(lc(M.G6, z))
    chi_ds: Counter = Counter()
    for d in (M.D122, M.D212, M.D221):
        chi_ds.update(grothendieck_class(lc(d, z)))
    lhs = chi_f
    rhs = Counter(chi_g6)
    rhs.update(chi_ds)
    passed = {k: v for k, v in lhs.items() if v} == {k: v for k, v in rhs.items() if v}
    return {
        "orbit": z.value,
        "lhs": {k.value: v for k, v in lhs.items() if v},
        "rhs": {k.value: v for k, v in rhs.items() if v},
        "passed": passed,
    }


def check_codim_vanishing() -> dict:
    """For every proper orbit closure: the polynomial ring's local cohomology
    vanishes below the codimension and is nonzero exactly there."""
    rows = []
    for z in PROPER_ORBITS:
        row = lc(M.S, z)
        degrees = sorted(deg for deg, mods in row.items() if mods)
        first = degrees[0] if degrees else None
        rows.append(
            {
                "orbit": z.value,
                "codim": codim(z),
                "first_nonzero_degree": first,
                "passed": first == codim(z),
            }
        )
    return {"passed": all(r["passed"] for r in rows), "rows": rows}
