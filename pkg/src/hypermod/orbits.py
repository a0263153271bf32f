"""Concrete 2x2x2 tensor geometry over exact rationals.

Hyperdeterminant evaluation, flattening ranks, the orbit decision tree, orbit
dimension via the infinitesimal action, and the finite isotropy spot checks.
Every rank decision runs over ``fractions.Fraction``; there is no floating
point anywhere in this module.

Group action convention: a group element (X, Y, Z) acts by contracting X on
the first index, Y on the second, Z on the third.  With this convention the
hyperdeterminant transforms by (det X * det Y * det Z)^2, which the seeded
property check pins down empirically.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import InternalInconsistencyError
from .localcoh import OrbitId

Matrix2 = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]

_IDX = tuple(product((0, 1), repeat=3))


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)  # accepts "p/q" and plain integers
    raise ValueError(f"expected an integer or 'p/q' string, got {value!r}")


@dataclass(frozen=True)
class Tensor222:
    """A 2x2x2 array of exact rationals, stored flat as x[4i + 2j + k]."""

    cells: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.cells) != 8:
            raise ValueError("a 2x2x2 tensor has exactly 8 entries")

    def __getitem__(self, ijk: tuple[int, int, int]) -> Fraction:
        i, j, k = ijk
        return self.cells[4 * i + 2 * j + k]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.cells)

    @classmethod
    def zero(cls) -> "Tensor222":
        return cls(tuple(Fraction(0) for _ in range(8)))

    @classmethod
    def basis(cls, i: int, j: int, k: int) -> "Tensor222":
        """Elementary tensor e_{ijk} with 1-based indices."""
        cells = [Fraction(0)] * 8
        cells[4 * (i - 1) + 2 * (j - 1) + (k - 1)] = Fraction(1)
        return cls(tuple(cells))

    def __add__(self, other: "Tensor222") -> "Tensor222":
        return Tensor222(tuple(a + b for a, b in zip(self.cells, other.cells)))

    @classmethod
    def from_nested(cls, data) -> "Tensor222":
        """Parse [[[x111,x112],[x121,x122]],[[x211,x212],[x221,x222]]] with
        entries given as integers or 'p/q' strings."""
        try:
            cells = [
                _frac(data[i][j][k]) for i, j, k in _IDX
            ]
        except (IndexError, TypeError, KeyError):
            raise ValueError("tensor must be a 2x2x2 nested array")
        return cls(tuple(cells))

    def to_nested(self) -> list:
        return [
            [[str(self[(i, j, 0)]), str(self[(i, j, 1)])] for j in (0, 1)]
            for i in (0, 1)
        ]


def hyperdet(t: Tensor222) -> Fraction:
    """Cayley's quartic invariant, evaluated term for term."""
    x = lambda i, j, k: t[(i - 1, j - 1, k - 1)]
    return (
        x(1, 1, 1) ** 2 * x(2, 2, 2) ** 2
        + x(1, 1, 2) ** 2 * x(2, 2, 1) ** 2
        + x(1, 2, 1) ** 2 * x(2, 1, 2) ** 2
        + x(2, 1, 1) ** 2 * x(1, 2, 2) ** 2
        - 2 * x(1, 1, 1) * x(1, 1, 2) * x(2, 2, 1) * x(2, 2, 2)
        - 2 * x(1, 1, 1) * x(1, 2, 1) * x(2, 1, 2) * x(2, 2, 2)
        - 2 * x(1, 1, 1) * x(1, 2, 2) * x(2, 1, 1) * x(2, 2, 2)
        - 2 * x(1, 1, 2) * x(1, 2, 1) * x(2, 1, 2) * x(2, 2, 1)
        - 2 * x(1, 1, 2) * x(1, 2, 2) * x(2, 2, 1) * x(2, 1, 1)
        - 2 * x(1, 2, 1) * x(1, 2, 2) * x(2, 1, 2) * x(2, 1, 1)
        + 4 * x(1, 1, 1) * x(1, 2, 2) * x(2, 1, 2) * x(2, 2, 1)
        + 4 * x(1, 1, 2) * x(1, 2, 1) * x(2, 1, 1) * x(2, 2, 2)
    )


def matrix_rank(rows: list[list[Fraction]]) -> int:
    """Exact rank by Gaussian elimination over the rationals."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            if rows[i][col] != 0:
                factor = rows[i][col] / pv
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def flattening_ranks(t: Tensor222) -> tuple[int, int, int]:
    """Ranks of the three 2x4 flattenings (first, second, third index)."""
    flat_a = [[t[(i, j, k)] for j, k in product((0, 1), repeat=2)] for i in (0, 1)]
    flat_b = [[t[(i, j, k)] for i, k in product((0, 1), repeat=2)] for j in (0, 1)]
    flat_c = [[t[(i, j, k)] for i, j in product((0, 1), repeat=2)] for k in (0, 1)]
    return (matrix_rank(flat_a), matrix_rank(flat_b), matrix_rank(flat_c))


def classify_orbit(t: Tensor222) -> OrbitId:
    """Decision tree on flattening ranks and the hyperdeterminant.

    Zero -> O0; all flattening ranks 1 -> O1; exactly one rank 1 -> the
    matching dimension-5 orbit; all ranks 2 with vanishing hyperdeterminant ->
    O5; nonvanishing -> the dense orbit.
    """
    if t.is_zero():
        return OrbitId.O0
    ranks = flattening_ranks(t)
    ones = ranks.count(1)
    if ones == 3:
        return OrbitId.O1
    if ones == 1:
        return (OrbitId.O122, OrbitId.O212, OrbitId.O221)[ranks.index(1)]
    if ones != 0:
        # Two rank-one flattenings force the third to be rank one as well.
        raise InternalInconsistencyError(f"impossible flattening ranks {ranks}")
    return OrbitId.O6 if hyperdet(t) != 0 else OrbitId.O5


def orbit_dim(t: Tensor222) -> int:
    """Dimension of the group orbit: rank of the 12 infinitesimal generator
    images (four elementary matrices acting on each of the three factors)."""
    rows = []
    for p, q in product((0, 1), repeat=2):
        rows.append([t[(q, j, k)] if i == p else Fraction(0) for i, j, k in _IDX])
        rows.append([t[(i, q, k)] if j == p else Fraction(0) for i, j, k in _IDX])
        rows.append([t[(i, j, q)] if k == p else Fraction(0) for i, j, k in _IDX])
    return matrix_rank(rows)


@dataclass(frozen=True)
class GroupElement:
    """Three invertible 2x2 rational matrices acting factorwise."""

    x: Matrix2
    y: Matrix2
    z: Matrix2

    def __post_init__(self):
        for m in (self.x, self.y, self.z):
            if _det2(m) == 0:
                raise ValueError("group element factors must be invertible")

    def det_product(self) -> Fraction:
        return _det2(self.x) * _det2(self.y) * _det2(self.z)


def _det2(m: Matrix2) -> Fraction:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def _contract_axis(t: Tensor222, m: Matrix2, axis: int) -> Tensor222:
    cells = []
    for i, j, k in _IDX:
        idx = (i, j, k)
        s = Fraction(0)
        for r in (0, 1):
            src = list(idx)
            src[axis] = r
            s += m[idx[axis]][r] * t[tuple(src)]
        cells.append(s)
    return Tensor222(tuple(cells))


def act(g: GroupElement, t: Tensor222) -> Tensor222:
    """Factor-by-factor contraction of (X, Y, Z) against the tensor."""
    return _contract_axis(_contract_axis(_contract_axis(t, g.x, 0), g.y, 1), g.z, 2)


def act_composed(g: GroupElement, t: Tensor222) -> Tensor222:
    """Same action as a single triple contraction; used to cross-check act()."""
    cells = []
    for i, j, k in _IDX:
        s = Fraction(0)
        for a, b, c in _IDX:
            s += g.x[i][a] * g.y[j][b] * g.z[k][c] * t[(a, b, c)]
        cells.append(s)
    return Tensor222(tuple(cells))


ORBIT_REPRESENTATIVES: dict[OrbitId, Tensor222] = {
    OrbitId.O0: Tensor222.zero(),
    OrbitId.O1: Tensor222.basis(1, 1, 1),
    OrbitId.O122: Tensor222.basis(1, 1, 1) + Tensor222.basis(1, 2, 2),
    OrbitId.O212: Tensor222.basis(1, 1, 1) + Tensor222.basis(2, 1, 2),
    OrbitId.O221: Tensor222.basis(1, 1, 1) + Tensor222.basis(2, 2, 1),
    OrbitId.O5: Tensor222.basis(1, 1, 1)
    + Tensor222.basis(1, 2, 2)
    + Tensor222.basis(2, 1, 2),
    OrbitId.O6: Tensor222.basis(1, 1, 1) + Tensor222.basis(2, 2, 2),
}


def _nonzero_rational(rng: random.Random) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-9, 9)
    return Fraction(num, rng.randint(1, 9))


def _rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def random_integer_tensor(rng: random.Random, bound: int = 5) -> Tensor222:
    return Tensor222(tuple(Fraction(rng.randint(-bound, bound)) for _ in range(8)))


def random_group_element(rng: random.Random, bound: int = 3) -> GroupElement:
    def invertible() -> Matrix2:
        while True:
            m = (
                (Fraction(rng.randint(-bound, bound)), Fraction(rng.randint(-bound, bound))),
                (Fraction(rng.randint(-bound, bound)), Fraction(rng.randint(-bound, bound))),
            )
            if _det2(m) != 0:
                return m

    return GroupElement(invertible(), invertible(), invertible())


def _diag(a: Fraction, d: Fraction) -> Matrix2:
    return ((a, Fraction(0)), (Fraction(0), d))


def _antidiag(b: Fraction, c: Fraction) -> Matrix2:
    return ((Fraction(0), b), (c, Fraction(0)))


def isotropy_spot_checks(seed: int = 0, samples: int = 20) -> dict:
    """Finite membership checks on the stabilizer families.

    (a) sampled elements of the two components of the dense-orbit stabilizer
    really fix the dense-orbit representative; (b) the tangential-orbit
    stabilizer equations hold at the identity and at sampled points of their
    parametrization, and the sampled elements fix the representative; (c) the
    two implementations of the action agree on random pairs.
    """
    rng = random.Random(seed)
    checks: list[dict] = []
    v6 = ORBIT_REPRESENTATIVES[OrbitId.O6]

    # (a) dense-orbit stabilizer: diagonal component x11*y11*z11 = x22*y22*z22 = 1
    diag_ok = True
    for _ in range(samples):
        x1, y1 = _nonzero_rational(rng), _nonzero_rational(rng)
        x2, y2 = _nonzero_rational(rng), _nonzero_rational(rng)
        g = GroupElement(
            _diag(x1, x2), _diag(y1, y2), _diag(1 / (x1 * y1), 1 / (x2 * y2))
        )
        diag_ok = diag_ok and act(g, v6) == v6
    checks.append({"check": "dense-orbit stabilizer, diagonal component", "passed": diag_ok})

    anti_ok = True
    for _ in range(samples):
        x12, y12 = _nonzero_rational(rng), _nonzero_rational(rng)
        x21, y21 = _nonzero_rational(rng), _nonzero_rational(rng)
        g = GroupElement(
            _antidiag(x12, x21),
            _antidiag(y12, y21),
            _antidiag(1 / (x12 * y12), 1 / (x21 * y21)),
        )
        anti_ok = anti_ok and act(g, v6) == v6
    checks.append(
        {"check": "dense-orbit stabilizer, antidiagonal component", "passed": anti_ok}
    )

    # (b) tangential-orbit stabilizer: upper-triangular X, Y and lower-
    # triangular Z solving the four stabilizer equations.
    v5 = ORBIT_REPRESENTATIVES[OrbitId.O5]

    def o5_equations_hold(x11, x12, x22, y11, y12, y22, z11, z21, z22) -> bool:
        return (
            x11 * y11 * z11 == 1
            and x11 * y22 * z22 == 1
            and x22 * y11 * z22 == 1
            and x11 * y11 * z21 + x11 * y12 * z22 + x12 * y11 * z22 == 0
        )

    one, zero = Fraction(1), Fraction(0)
    o5_ok = o5_equations_hold(one, zero, one, one, zero, one, one, zero, one)
    for _ in range(samples):
        x11, y11, z22 = (
            _nonzero_rational(rng),
            _nonzero_rational(rng),
            _nonzero_rational(rng),
        )
        x12, y12 = _rational(rng), _rational(rng)
        x22 = 1 / (y11 * z22)
        y22 = 1 / (x11 * z22)
        z11 = 1 / (x11 * y11)
        z21 = -z22 * (x11 * y12 + x12 * y11) / (x11 * y11)
        o5_ok = o5_ok and o5_equations_hold(x11, x12, x22, y11, y12, y22, z11, z21, z22)
        g = GroupElement(
            ((x11, x12), (zero, x22)),
            ((y11, y12), (zero, y22)),
            ((z11, zero), (z21, z22)),
        )
        o5_ok = o5_ok and act(g, v5) == v5
    checks.append(
        {"check": "tangential-orbit stabilizer equations and fixing", "passed": o5_ok}
    )

    # (c) the two action implementations agree
    action_ok = True
    for _ in range(samples):
        g = random_group_element(rng)
        t = random_integer_tensor(rng)
        action_ok = action_ok and act(g, t) == act_composed(g, t)
    checks.append({"check": "factorwise and composed action agree", "passed": action_ok})

    return {
        "seed": seed,
        "samples": samples,
        "passed": all(c["passed"] for c in checks),
        "checks": checks,
    }
