import pytest

from hypermod.errors import PathSpaceError
from hypermod.quiver import (
    Quiver,
    Relation,
    ext1_dim,
    injective_hull_factors,
    module_category_quiver,
    path_basis,
    quiver_consistency_report,
    simple_of,
    vertex_of,
)
from hypermod.simples import ModuleId, SimpleId, composition_series


def test_quiver_shape():
    q, rels = module_category_quiver()
    assert len(q.vertices) == 8
    assert len(q.arrows) == 16
    # 4 loops + 3 + 3 difference relations + 9 + 9 + 3 + 3 two-step products
    assert len(rels) == 34


def test_relation_endpoints_are_consistent():
    q, rels = module_category_quiver()
    for rel in rels:
        endpoints = {
            (q.path_source(path), q.path_target(path)) for _, path in rel.terms
        }
        assert len(endpoints) == 1
        for _, path in rel.terms:
            assert len(path) == 2


def test_path_basis_examples():
    q, rels = module_category_quiver()
    assert path_basis(q, rels, "s", "s").dim == 1
    d1_g6 = path_basis(q, rels, "d1", "g6")
    assert d1_g6.dim == 1
    assert len(d1_g6.representatives()[0]) == 2
    assert path_basis(q, rels, "d5", "g6").dim == 0
    assert path_basis(q, rels, "e", "s").dim == 1
    assert path_basis(q, rels, "e", "s").representatives() == [("psi0", "psi1")]


def test_path_basis_unknown_vertex():
    q, rels = module_category_quiver()
    with pytest.raises(ValueError, match="unknown vertex"):
        path_basis(q, rels, "s", "nope")


def test_all_path_spaces_stabilize_by_length_two():
    q, rels = module_category_quiver()
    for v in q.vertices:
        for w in q.vertices:
            assert path_basis(q, rels, v, w).max_nonzero_length <= 2


def test_non_stabilizing_quotient_raises():
    q = Quiver(("a",), (("loop", "a", "a"),))
    with pytest.raises(PathSpaceError, match="did not stabilize"):
        path_basis(q, [], "a", "a", length_cap=4)


def test_heterogeneous_relations_rejected():
    q = Quiver(("a",), (("loop", "a", "a"),))
    mixed = Relation(((1, ("loop", "loop")), (1, ("loop", "loop", "loop"))))
    with pytest.raises(ValueError, match="homogeneous"):
        path_basis(q, [mixed], "a", "a")


def test_ext_dimensions():
    assert ext1_dim(SimpleId.D122, SimpleId.G6) == 1
    assert ext1_dim(SimpleId.D1, SimpleId.G6) == 0
    assert ext1_dim(SimpleId.D122, SimpleId.D5) == 0
    assert ext1_dim(SimpleId.G6, SimpleId.D122) == 1
    assert ext1_dim(SimpleId.D5, SimpleId.S) == 1
    assert ext1_dim(SimpleId.S, SimpleId.D5) == 1
    assert ext1_dim(SimpleId.E, SimpleId.S) == 0
    assert ext1_dim(SimpleId.S, SimpleId.E) == 0


def test_injective_hull_factors():
    assert injective_hull_factors(SimpleId.S) == {
        SimpleId.S: 1,
        SimpleId.D5: 1,
        SimpleId.E: 1,
    }
    assert injective_hull_factors(SimpleId.G6) == {
        SimpleId.G6: 1,
        SimpleId.D122: 1,
        SimpleId.D212: 1,
        SimpleId.D221: 1,
        SimpleId.D1: 1,
    }
    assert injective_hull_factors(SimpleId.D5)[SimpleId.S] == 1


def test_hulls_match_composition_series():
    # cross-module consistency: path counts reproduce the localization layers
    for simple, module in ((SimpleId.S, ModuleId.S_h), (SimpleId.G6, ModuleId.S_h_sqrt)):
        factors = composition_series(module).factors()
        expected = {s: factors.count(s) for s in set(factors)}
        assert injective_hull_factors(simple) == expected


def test_vertex_maps_round_trip():
    for s in (SimpleId.S, SimpleId.G6, SimpleId.D122, SimpleId.D1):
        assert simple_of(vertex_of(s)) is s


def test_consistency_report_passes():
    report = quiver_consistency_report()
    assert report["passed"]
    assert all(c["passed"] for c in report["checks"])
