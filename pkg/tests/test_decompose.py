import pytest
from hypothesis import given, settings

from chibound.ext.decompose import (
    CLAIM_CHECKS,
    ClaimReport,
    InvalidConfiguration,
    InvalidTriangle,
    TriangleHasK4,
    around_triangle,
    d1d2,
    five_set_split,
    triangles,
    verify_bi_p3_free,
)
from chibound.lib.graph import Graph, VertexSet
from tests.conftest import class_members


def _fan() -> Graph:
    # Triangle 0-1-2, a pendant 3 on 0, a vertex 4 seeing 0 and 1, an isolated 5.
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4), (1, 4)])


def test_d1d2_of_c5(c5: Graph):
    split = d1d2(c5)
    assert split.d1 == c5.vertices
    assert not split.d2


def test_d1d2_of_k3_up2(k3_up2: Graph):
    split = d1d2(k3_up2)
    assert split.d1 == VertexSet.of(0, 1, 2)
    assert split.d2 == VertexSet.of(3, 4)


def test_d1d2_of_two_triangles():
    g = Graph.complete(3).disjoint_union(Graph.complete(3))
    assert not d1d2(g).d1
    assert not d1d2(g, closed=True).d1


def test_five_set_split_of_c5(c5: Graph):
    split = five_set_split(c5, 0, 1, 3)
    assert split.parts == (
        VertexSet(),
        VertexSet.of(4),
        VertexSet(),
        VertexSet.of(2),
        VertexSet(),
    )


def test_five_set_split_requires_configuration(c5: Graph):
    with pytest.raises(InvalidConfiguration):
        five_set_split(c5, 0, 2, 3)
    with pytest.raises(InvalidConfiguration):
        five_set_split(c5, 0, 1, 2)
    with pytest.raises(InvalidConfiguration):
        five_set_split(c5, 0, 1, 1)


def test_around_triangle_sets():
    d = around_triangle(_fan(), (0, 1, 2))
    assert d.a0 == VertexSet.of(5)
    assert d.b1 == VertexSet.of(3, 5)
    assert d.b1_minus_a0 == VertexSet.of(3)
    assert not d.b2 and not d.b3
    assert d.a2 == VertexSet.of(4)
    assert d.a2_splits == (VertexSet(), VertexSet.of(4), VertexSet())
    assert d.split_group(2) == VertexSet.of(4, 2)
    assert verify_bi_p3_free(_fan(), d)


def test_around_triangle_rejects_bad_triangles(c5: Graph):
    with pytest.raises(InvalidTriangle):
        around_triangle(c5, (0, 1, 2))
    with pytest.raises(InvalidTriangle):
        around_triangle(Graph.complete(3), (0, 1))
    with pytest.raises(TriangleHasK4):
        around_triangle(Graph.complete(4), (0, 1, 2))
    d = around_triangle(Graph.complete(4), (0, 1, 2), assert_k4_free=False)
    assert d.a3 == VertexSet.of(3)


def test_triangles_are_listed_once():
    listed = list(triangles(Graph.complete(4)))
    assert listed == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert list(triangles(Graph.cycle(5))) == []


def test_claim_report_merge():
    a = ClaimReport("x", graphs=2, hypothesis_hits=1)
    b = ClaimReport("x", graphs=3, hypothesis_hits=4)
    merged = a.merge(b)
    assert (merged.graphs, merged.hypothesis_hits) == (5, 5)
    assert merged.passed
    with pytest.raises(ValueError):
        a.merge(ClaimReport("y"))


@settings(max_examples=40)
@given(class_members(max_n=8))
def test_structural_claims_hold_on_members(g: Graph):
    for claim_id, check in CLAIM_CHECKS.items():
        report = check(g)
        assert report.claim_id == claim_id
        assert report.passed, report.to_json()
