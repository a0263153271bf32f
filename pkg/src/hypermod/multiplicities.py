"""Closed-form invariant multiplicities for triples of two-row partitions.

The piecewise formula below computes, for three partitions of the same size d
with at most two rows each, the dimension of the symmetric-group invariants of
the corresponding triple tensor product.  It is the workhorse behind every
graded character in this package.  ``verify_against_oracle`` replays it against
the character-theoretic oracle in :mod:`hypermod.symchar` over an exhaustive
range, which is how the formula's branch structure is kept honest.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .errors import InternalInconsistencyError
from .symchar import DEGREE_CAP, kron_invariant_dim
from .weights import Weight2


class TwoRowTriple(NamedTuple):
    """Three two-row partition shapes of equal size, as dominant pairs."""

    lam: Weight2
    mu: Weight2
    nu: Weight2

    @property
    def d(self) -> int:
        return self.lam.size()

    @property
    def f(self) -> int:
        return max(self.lam.b, self.mu.b, self.nu.b)

    @property
    def e(self) -> int:
        return self.lam.b + self.mu.b + self.nu.b

    def validate(self) -> None:
        ok = (
            self.lam.is_partition()
            and self.mu.is_partition()
            and self.nu.is_partition()
            and self.lam.size() == self.mu.size() == self.nu.size()
        )
        if not ok:
            raise ValueError("not a two-row triple of equal size")


def _closed_form(d: int, f: int, e: int) -> int:
    # Branch guards in sentence order; the middle branch is tested before the
    # last one, whose guard e < d - 1 makes them disjoint.
    if e < 2 * f:
        return 0
    if e >= d - 1:
        m = d // 2 - f if (e % 2 == 1 and d % 2 == 0) else d // 2 - f + 1
    else:  # e >= 2f and e < d - 1
        m = (e + 1) // 2 - f if e % 2 == 1 else (e + 1) // 2 - f + 1
    if m < 0:
        # A negative value would mean the case analysis was misread; abort
        # rather than clamp so the oracle comparison fails loudly.
        raise InternalInconsistencyError(
            f"closed form produced {m} < 0 at d={d}, f={f}, e={e}"
        )
    return m


def m_closed_form(t: TwoRowTriple) -> int:
    """Invariant multiplicity of a two-row triple via the piecewise formula."""
    t.validate()
    return _closed_form(t.d, t.f, t.e)


def two_row_pairs(d: int) -> list[Weight2]:
    """All partitions of d with at most two rows, as dominant pairs."""
    return [Weight2(d - k, k) for k in range(d // 2 + 1)]


def _as_partition(w: Weight2) -> tuple[int, ...]:
    return tuple(x for x in (w.a, w.b) if x)


@dataclass
class OracleReport:
    d_max: int
    checked: int = 0
    mismatches: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {
            "d_max": self.d_max,
            "checked": self.checked,
            "mismatches": self.mismatches,
            "passed": self.passed,
        }


def verify_against_oracle(d_max: int) -> OracleReport:
    """Compare the closed form with the character oracle on every two-row
    triple of every size up to ``d_max``.  Discrepancies are reported, not
    raised."""
    if d_max > DEGREE_CAP:
        raise ValueError(f"d_max {d_max} exceeds the configured cap {DEGREE_CAP}")
    report = OracleReport(d_max=d_max)
    for d in range(d_max + 1):
        pairs = two_row_pairs(d)
        for lam in pairs:
            for mu in pairs:
                for nu in pairs:
                    expected = kron_invariant_dim(
                        _as_partition(lam), _as_partition(mu), _as_partition(nu)
                    )
                    got = m_closed_form(TwoRowTriple(lam, mu, nu))
                    report.checked += 1
                    if got != expected:
                        report.mismatches.append(
                            {
                                "lam": list(lam),
                                "mu": list(mu),
                                "nu": list(nu),
                                "closed_form": got,
                                "oracle": expected,
                            }
                        )
    return report
