"""Exact symmetric-group character arithmetic.

Character values come from the Murnaghan-Nakayama border-strip recursion,
memoized on (shape, cycle type).  On top of that sits the brute-force oracle
for the dimension of the invariant subspace of a triple tensor product of
irreducibles, which is the ground truth the closed-form two-row multiplicity
formula is checked against, and which also handles the four-row shapes needed
by the rank-one-flattening simple modules.

Everything is integer arithmetic; divisions are checked for exactness and
abort loudly if they fail.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterator, NamedTuple

from .errors import InternalInconsistencyError
from .weights import Weight2

Partition = tuple[int, ...]

# Degree cap for memoized character work; keeps the memo tables bounded.
# Every verification in this package needs degree <= 15.
DEGREE_CAP = 16


def validate_partition(parts) -> Partition:
    p = tuple(parts)
    if any(not isinstance(x, int) or isinstance(x, bool) for x in p):
        raise ValueError("partition parts must be integers")
    if any(x <= 0 for x in p):
        raise ValueError("partition parts must be positive")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError("partition parts must be weakly decreasing")
    return p


def partitions(d: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of d in lexicographic order, e.g. (1,1,1) < (2,1) < (3)."""
    if d < 0:
        return
    if d == 0:
        yield ()
        return
    cap = d if max_part is None else min(max_part, d)
    for first in range(1, cap + 1):
        for rest in partitions(d - first, first):
            yield (first,) + rest


class ConjClass(NamedTuple):
    cycle_type: Partition
    size: int


def class_size(cycle_type: Partition) -> int:
    """Number of permutations with the given cycle type: d! / prod(i^m_i * m_i!)."""
    d = sum(cycle_type)
    z = 1
    mult = 1
    prev = None
    for part in cycle_type:
        mult = mult + 1 if part == prev else 1
        z *= part * mult
        prev = part
    total = factorial(d)
    if total % z:
        raise InternalInconsistencyError("class size division not exact")
    return total // z


def conjugacy_classes(d: int) -> list[ConjClass]:
    return [ConjClass(ct, class_size(ct)) for ct in partitions(d)]


def _strip_removals(lam: Partition, length: int) -> Iterator[tuple[int, Partition]]:
    """Yield (sign, smaller shape) for each border strip of the given length.

    Beta-number form: removing a strip of size L means lowering one first-column
    hook length by L onto an unoccupied value; the sign is (-1)^(rows crossed).
    """
    k = len(lam)
    betas = [lam[i] + (k - 1 - i) for i in range(k)]
    occupied = set(betas)
    for b in betas:
        nb = b - length
        if nb < 0 or nb in occupied:
            continue
        crossed = sum(1 for c in betas if nb < c < b)
        new = sorted((occupied - {b}) | {nb}, reverse=True)
        shape = tuple(new[i] - (k - 1 - i) for i in range(k))
        yield (-1) ** crossed, tuple(x for x in shape if x)


@lru_cache(maxsize=None)
def _char(lam: Partition, cls: Partition) -> int:
    if not cls:
        return 1
    head, rest = cls[0], cls[1:]
    return sum(sign * _char(shape, rest) for sign, shape in _strip_removals(lam, head))


def character_value(lam, cls) -> int:
    """Irreducible character of shape ``lam`` on the class of cycle type ``cls``."""
    lam = validate_partition(lam)
    cls = validate_partition(cls)
    d = sum(lam)
    if d != sum(cls):
        raise ValueError("partition sizes differ")
    if d > DEGREE_CAP:
        raise ValueError(f"degree {d} exceeds the configured cap {DEGREE_CAP}")
    return _char(lam, cls)


@lru_cache(maxsize=None)
def _kron(lam: Partition, mu: Partition, nu: Partition) -> int:
    d = sum(lam)
    total = 0
    for ct in partitions(d):
        total += class_size(ct) * _char(lam, ct) * _char(mu, ct) * _char(nu, ct)
    denom = factorial(d)
    if total % denom:
        raise InternalInconsistencyError("invariant-dimension sum not divisible by d!")
    value = total // denom
    if value < 0:
        raise InternalInconsistencyError("invariant dimension came out negative")
    return value


def kron_invariant_dim(lam, mu, nu) -> int:
    """Dimension of the invariants of [lam] x [mu] x [nu] under the diagonal
    symmetric-group action: (1/d!) * sum of class_size * chi * chi * chi."""
    lam, mu, nu = validate_partition(lam), validate_partition(mu), validate_partition(nu)
    d = sum(lam)
    if not (d == sum(mu) == sum(nu)):
        raise ValueError("partition sizes differ")
    if d > DEGREE_CAP:
        raise ValueError(f"degree {d} exceeds the configured cap {DEGREE_CAP}")
    return _kron(lam, mu, nu)


def schur_dim_gl2(w: Weight2) -> int:
    """Dimension of the rank-2 irreducible with highest weight (a, b): a - b + 1."""
    if not w.is_dominant():
        raise ValueError("weight must be dominant")
    return w.a - w.b + 1
