"""A small path-algebra-with-relations engine and the specific quiver whose
representations model the category of equivariant modules on the tensor space.

Paths are tuples of arrow names written in composition order: the rightmost
arrow is applied first, so the pair ("phi0", "psi0") means "psi0 then phi0".
Relations are integer linear combinations of equal-length paths (length at
least two) sharing source and target; the reduction works per
(source, target, length) block with exact rational elimination, which is why
the engine insists on length-homogeneous relations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import NamedTuple, Sequence

from .errors import PathSpaceError
from .simples import SimpleId

Path = tuple[str, ...]


class Arrow(NamedTuple):
    name: str
    source: str
    target: str


class Relation(NamedTuple):
    """Integer combination of composable paths with common endpoints."""

    terms: tuple[tuple[int, Path], ...]


class Quiver:
    def __init__(self, vertices, arrows):
        self.vertices = tuple(vertices)
        self.arrows = tuple(Arrow(*a) for a in arrows)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow names")
        vset = set(self.vertices)
        for a in self.arrows:
            if a.source not in vset or a.target not in vset:
                raise ValueError(f"arrow {a.name} has endpoints outside the quiver")
        self.source = {a.name: a.source for a in self.arrows}
        self.target = {a.name: a.target for a in self.arrows}
        self._out: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in sorted(self.arrows):
            self._out[a.source].append(a)
        self._path_cache: dict[tuple[str, str, int], list[Path]] = {}

    def arrows_between(self, v: str, w: str) -> list[Arrow]:
        return [a for a in self._out[v] if a.target == w]

    def path_source(self, path: Path) -> str:
        return self.source[path[-1]]

    def path_target(self, path: Path) -> str:
        return self.target[path[0]]

    def paths(self, v: str, w: str, length: int) -> list[Path]:
        """All paths v -> w of exactly the given length, lexicographically."""
        key = (v, w, length)
        cached = self._path_cache.get(key)
        if cached is not None:
            return cached
        if length == 0:
            out = [()] if v == w else []
        else:
            out = []
            for a in self._out[v]:
                for rest in self.paths(a.target, w, length - 1):
                    out.append(rest + (a.name,))
            out.sort()
        self._path_cache[key] = out
        return out


def _relation_profile(q: Quiver, rel: Relation) -> tuple[str, str, int]:
    """Validate a relation and return its (source, target, length)."""
    if not rel.terms:
        raise ValueError("empty relation")
    profiles = set()
    for coeff, path in rel.terms:
        if len(path) < 2:
            raise ValueError("relation terms must have length at least two")
        for left, right in zip(path, path[1:]):
            if q.source[left] != q.target[right]:
                raise ValueError(f"non-composable path {path}")
        profiles.add((q.path_source(path), q.path_target(path), len(path)))
    if len(profiles) != 1:
        raise ValueError(
            "relation terms must share source, target and length "
            "(the per-length reduction requires homogeneous relations)"
        )
    return profiles.pop()


def _row_reduce(rows: list[dict[int, Fraction]]) -> tuple[int, set[int]]:
    """Gaussian elimination on sparse rows; returns (rank, pivot column set).

    Ideal rows here have one or two nonzero entries, so rows are kept as
    column -> coefficient maps and reduced against an echelon dictionary.
    """
    echelon: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        row = dict(row)
        while row:
            col = min(row)
            pivot = echelon.get(col)
            if pivot is None:
                pv = row[col]
                echelon[col] = {c: v / pv for c, v in row.items()}
                break
            factor = row[col]
            for c, v in pivot.items():
                nv = row.get(c, 0) - factor * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(echelon), set(echelon)


@dataclass
class PathBasis:
    """Residue-class basis of the path space v -> w in the quotient algebra."""

    source: str
    target: str
    length_cap: int
    by_length: dict[int, list[Path]] = field(default_factory=dict)

    @property
    def dims(self) -> dict[int, int]:
        return {length: len(paths) for length, paths in self.by_length.items()}

    @property
    def dim(self) -> int:
        return sum(len(paths) for paths in self.by_length.values())

    @property
    def max_nonzero_length(self) -> int:
        nonzero = [length for length, paths in self.by_length.items() if paths]
        return max(nonzero) if nonzero else -1

    def representatives(self) -> list[Path]:
        return [p for length in sorted(self.by_length) for p in self.by_length[length]]


def path_basis(
    q: Quiver, relations: Sequence[Relation], v: str, w: str, length_cap: int = 6
) -> PathBasis:
    """Basis of the quotient path space v -> w by the two-sided relation ideal.

    Per length block, the ideal is spanned by every relation pre- and
    post-composed with all paths that land it in the block; the surviving
    classes are the non-pivot paths.  Raises if classes still appear in the
    last two lengths below the cap (the quotient looked non-nilpotent).
    """
    if length_cap < 1:
        raise ValueError("length_cap must be at least 1")
    for name in (v, w):
        if name not in q.vertices:
            raise ValueError(f"unknown vertex {name!r}")
    rel_profiles = [(rel, _relation_profile(q, rel)) for rel in relations]
    result = PathBasis(source=v, target=w, length_cap=length_cap)
    for length in range(length_cap + 1):
        basis_paths = q.paths(v, w, length)
        if not basis_paths:
            result.by_length[length] = []
            continue
        index = {p: i for i, p in enumerate(basis_paths)}
        seen: set[tuple[tuple[int, Fraction], ...]] = set()
        rows: list[dict[int, Fraction]] = []
        for rel, (rs, rt, rlen) in rel_profiles:
            if rlen > length:
                continue
            for right_len in range(length - rlen + 1):
                left_len = length - rlen - right_len
                for right in q.paths(v, rs, right_len):
                    for left in q.paths(rt, w, left_len):
                        row: dict[int, Fraction] = {}
                        for coeff, term in rel.terms:
                            col = index[left + term + right]
                            total = row.get(col, 0) + coeff
                            if total:
                                row[col] = Fraction(total)
                            else:
                                row.pop(col, None)
                        key = tuple(sorted(row.items()))
                        if row and key not in seen:
                            seen.add(key)
                            rows.append(row)
        rank, pivots = _row_reduce(rows)
        result.by_length[length] = [
            p for i, p in enumerate(basis_paths) if i not in pivots
        ]
    dims = result.dims
    if dims.get(length_cap, 0) or dims.get(length_cap - 1, 0):
        raise PathSpaceError(
            f"path space {v} -> {w} did not stabilize below length {length_cap}"
        )
    return result


_IJK = ("122", "212", "221")

_VERTEX_OF_SIMPLE = {
    SimpleId.S: "s",
    SimpleId.D5: "d5",
    SimpleId.E: "e",
    SimpleId.G6: "g6",
    SimpleId.D122: "d122",
    SimpleId.D212: "d212",
    SimpleId.D221: "d221",
    SimpleId.D1: "d1",
}
_SIMPLE_OF_VERTEX = {v: s for s, v in _VERTEX_OF_SIMPLE.items()}


def vertex_of(s: SimpleId) -> str:
    return _VERTEX_OF_SIMPLE[s]


def simple_of(vertex: str) -> SimpleId:
    return _SIMPLE_OF_VERTEX[vertex]


@lru_cache(maxsize=1)
def module_category_quiver() -> tuple[Quiver, tuple[Relation, ...]]:
    """The eight-vertex quiver with relations modelling the module category.

    One component links s, d5, e in a chain of inverse arrow pairs; the other
    links the three rank-one-flattening vertices to g6 and d1.  Relations: the
    four two-step loops through s/e, all differences of two-step d1 -> g6 and
    g6 -> d1 routes, and every two-step path into or out of a d_ijk vertex.
    """
    vertices = ("s", "d5", "e", "g6", "d122", "d212", "d221", "d1")
    arrows = [
        ("phi0", "s", "d5"),
        ("psi0", "d5", "s"),
        ("phi1", "d5", "e"),
        ("psi1", "e", "d5"),
    ]
    for ijk in _IJK:
        arrows += [
            (f"alpha{ijk}", f"d{ijk}", "g6"),
            (f"beta{ijk}", "g6", f"d{ijk}"),
            (f"gamma{ijk}", f"d{ijk}", "d1"),
            (f"delta{ijk}", "d1", f"d{ijk}"),
        ]
    q = Quiver(vertices, arrows)

    def rel(*terms: tuple[int, Path]) -> Relation:
        return Relation(tuple(terms))

    relations = [
        rel((1, ("phi0", "psi0"))),
        rel((1, ("psi0", "phi0"))),
        rel((1, ("phi1", "psi1"))),
        rel((1, ("psi1", "phi1"))),
    ]
    # differences over unordered distinct pairs of labels
    for i in range(3):
        for j in range(i + 1, 3):
            a, b = _IJK[i], _IJK[j]
            relations.append(
                rel((1, (f"alpha{a}", f"delta{a}")), (-1, (f"alpha{b}", f"delta{b}")))
            )
            relations.append(
                rel((1, (f"gamma{a}", f"beta{a}")), (-1, (f"gamma{b}", f"beta{b}")))
            )
    # all ordered label pairs, equal ones included
    for a, b in product(_IJK, repeat=2):
        relations.append(rel((1, (f"beta{b}", f"alpha{a}"))))
        relations.append(rel((1, (f"delta{b}", f"gamma{a}"))))
    for a in _IJK:
        relations.append(rel((1, (f"alpha{a}", f"beta{a}"))))
        relations.append(rel((1, (f"gamma{a}", f"delta{a}"))))
    return q, tuple(relations)


def ext1_dim(m: SimpleId, n: SimpleId) -> int:
    """Dimension of the first extension space between two simples: the number
    of arrows between the corresponding vertices."""
    q, _ = module_category_quiver()
    return len(q.arrows_between(vertex_of(m), vertex_of(n)))


def injective_hull_factors(m: SimpleId, length_cap: int = 6) -> dict[SimpleId, int]:
    """Composition-factor multiplicities of the injective hull of a simple:
    the path-space dimension from each vertex into the simple's vertex."""
    q, rels = module_category_quiver()
    out: dict[SimpleId, int] = {}
    for n in _VERTEX_OF_SIMPLE:
        d = path_basis(q, rels, vertex_of(n), vertex_of(m), length_cap).dim
        if d:
            out[n] = d
    return out


def _arrow_count_matrix(q: Quiver) -> dict[tuple[str, str], int]:
    counts: dict[tuple[str, str], int] = {}
    for a in q.arrows:
        counts[(a.source, a.target)] = counts.get((a.source, a.target), 0) + 1
    return counts


def quiver_consistency_report(length_cap: int = 6) -> dict:
    """Run the structural self-checks: path spaces stabilize by length two,
    the label-permutation symmetry holds, and arrow counts are invariant under
    the Fourier relabelling of vertices."""
    from .simples import fourier_on_simples

    q, rels = module_category_quiver()
    checks: list[dict] = []

    max_len = -1
    dim_table: dict[tuple[str, str], int] = {}
    for v in q.vertices:
        for w in q.vertices:
            basis = path_basis(q, rels, v, w, length_cap)
            dim_table[(v, w)] = basis.dim
            max_len = max(max_len, basis.max_nonzero_length)
    checks.append(
        {
            "check": "path spaces stabilize with maximal nonzero length 2",
            "max_nonzero_length": max_len,
            "passed": max_len <= 2,
        }
    )

    rotate = {"122": "212", "212": "221", "221": "122"}

    def rotate_vertex(v: str) -> str:
        return f"d{rotate[v[1:]]}" if v in ("d122", "d212", "d221") else v

    symmetric = all(
        dim_table[(v, w)] == dim_table[(rotate_vertex(v), rotate_vertex(w))]
        for v in q.vertices
        for w in q.vertices
    )
    checks.append(
        {"check": "label-rotation symmetry of path dimensions", "passed": symmetric}
    )

    counts = _arrow_count_matrix(q)
    fourier_ok = all(
        counts.get((vertex_of(m), vertex_of(n)), 0)
        == counts.get(
            (vertex_of(fourier_on_simples(m)), vertex_of(fourier_on_simples(n))), 0
        )
        for m in _VERTEX_OF_SIMPLE
        for n in _VERTEX_OF_SIMPLE
    )
    checks.append(
        {"check": "arrow counts invariant under the Fourier relabelling", "passed": fourier_ok}
    )

    return {"passed": all(c["passed"] for c in checks), "checks": checks}
