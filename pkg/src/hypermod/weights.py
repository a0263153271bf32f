"""Rank-2 integer weight arithmetic.

Weights here are pairs (a, b) indexing irreducible representations of a rank-2
general linear group, and triples of such pairs indexing irreducibles of the
product group acting on a 2x2x2 tensor space.  Everything is plain (unbounded)
Python integer arithmetic, so large shifts cannot overflow.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple


class Weight2(NamedTuple):
    """An integer pair (a, b); dominant when a >= b."""

    a: int
    b: int

    def is_dominant(self) -> bool:
        return self.a >= self.b

    def is_partition(self) -> bool:
        """True when the pair is a genuine partition shape (a >= b >= 0)."""
        return self.a >= self.b >= 0

    def size(self) -> int:
        return self.a + self.b

    def dual(self) -> "Weight2":
        """Index of the dual representation: (a, b) -> (-b, -a).  Involutive."""
        return Weight2(-self.b, -self.a)

    def fourier(self) -> "Weight2":
        """Dual shifted by the determinant weight (4, 4) of the full 8-dim space."""
        return Weight2(4 - self.b, 4 - self.a)

    def shift(self, k: int) -> "Weight2":
        return Weight2(self.a + k, self.b + k)


class BottResult(NamedTuple):
    """Sign and dominant rewrite of a possibly non-dominant weight.

    ``sign`` is 0 exactly on the line b = a + 1; ``normalized`` is only
    meaningful when ``sign`` is nonzero, and is then dominant.
    """

    sign: int
    normalized: Weight2


def is_dominant(w: Weight2) -> bool:
    return w.a >= w.b


def dual(w: Weight2) -> Weight2:
    return w.dual()


def fourier(w: Weight2) -> Weight2:
    return w.fourier()


def bott_normalize(w: Weight2) -> BottResult:
    """Sorted-shift normalization pi -> sort(pi + rho) - rho with rho = (1, 0).

    The sign is the sign of the permutation sorting pi + rho; a tie (a + 1 == b)
    yields sign 0.
    """
    if w.a + 1 > w.b:
        return BottResult(1, w)
    if w.a + 1 == w.b:
        return BottResult(0, w)
    return BottResult(-1, Weight2(w.b - 1, w.a + 1))


class TripleWeight(NamedTuple):
    """A triple of rank-2 weights; the key type for all multiplicity queries.

    Named-tuple nesting gives lexicographic ordering on the flattened 6-tuple
    for free, which fixes a deterministic output order everywhere.
    """

    lam: Weight2
    mu: Weight2
    nu: Weight2

    @classmethod
    def of(cls, l1: int, l2: int, m1: int, m2: int, n1: int, n2: int) -> "TripleWeight":
        return cls(Weight2(l1, l2), Weight2(m1, m2), Weight2(n1, n2))

    @classmethod
    def diag(cls, a: int, b: int) -> "TripleWeight":
        """The triple with the same pair (a, b) in all three factors."""
        w = Weight2(a, b)
        return cls(w, w, w)

    def is_dominant(self) -> bool:
        return self.lam.is_dominant() and self.mu.is_dominant() and self.nu.is_dominant()

    def sizes(self) -> tuple[int, int, int]:
        return (self.lam.size(), self.mu.size(), self.nu.size())

    def dual(self) -> "TripleWeight":
        return TripleWeight(self.lam.dual(), self.mu.dual(), self.nu.dual())

    def fourier(self) -> "TripleWeight":
        return TripleWeight(self.lam.fourier(), self.mu.fourier(), self.nu.fourier())

    def shift(self, k: int) -> "TripleWeight":
        return TripleWeight(self.lam.shift(k), self.mu.shift(k), self.nu.shift(k))

    def max_abs_entry(self) -> int:
        return max(abs(x) for pair in self for x in pair)

    def to_lists(self) -> list[list[int]]:
        return [[self.lam.a, self.lam.b], [self.mu.a, self.mu.b], [self.nu.a, self.nu.b]]

    @classmethod
    def from_lists(cls, data) -> "TripleWeight":
        """Parse the wire format [[a,b],[c,d],[e,f]]; raises ValueError if malformed."""
        try:
            (l1, l2), (m1, m2), (n1, n2) = data
        except (TypeError, ValueError):
            raise ValueError("weight must be three integer pairs, e.g. [[3,1],[2,2],[2,2]]")
        entries = (l1, l2, m1, m2, n1, n2)
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in entries):
            raise ValueError("weight entries must be integers")
        return cls.of(*entries)


def dominant_pairs(lo: int, hi: int) -> Iterator[Weight2]:
    """All dominant pairs with both entries in [lo, hi], lexicographically."""
    for a in range(lo, hi + 1):
        for b in range(lo, a + 1):
            yield Weight2(a, b)


def dominant_triples(lo: int, hi: int) -> Iterator[TripleWeight]:
    """All componentwise-dominant triples with entries in [lo, hi], in key order."""
    pairs = list(dominant_pairs(lo, hi))
    for lam in pairs:
        for mu in pairs:
            for nu in pairs:
                yield TripleWeight(lam, mu, nu)
