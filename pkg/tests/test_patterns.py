from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chibound.ext.generators import named
from chibound.ext.oracle import brute_contains
from chibound.ext.patterns import (
    CATALOG_NAMES,
    UnknownPattern,
    UnknownPatternLabel,
    catalog,
    contains_induced,
    find_induced,
    get_pattern,
    is_bounds_class_member,
    is_class_member,
    patterns_found,
    placement_order,
)
from chibound.lib.graph import Graph, VertexSet
from tests.conftest import graphs, to_nx

SMALL_PATTERNS = ("p3", "p4", "c4", "c5", "k3", "k4", "2k2", "p3up2", "k3up2", "diamond")


def _induced_copy(g: Graph, pattern: nx.Graph) -> bool:
    h = to_nx(g)
    return any(
        nx.is_isomorphic(h.subgraph(s), pattern)
        for s in combinations(range(g.n), pattern.number_of_nodes())
    )


def test_catalog_names_are_unique():
    assert len(set(CATALOG_NAMES)) == len(CATALOG_NAMES) == len(catalog())


def test_unknown_pattern():
    with pytest.raises(UnknownPattern):
        get_pattern("petersen")


def test_named_sizes():
    codomino = named("codomino")
    assert (codomino.n, codomino.edge_count) == (6, 8)
    x2 = named("x2")
    assert (x2.n, x2.edge_count) == (7, 11)
    assert named("yfam+edge").edge_count == named("yfam").edge_count + 1


@given(graphs(max_n=7), st.sampled_from(SMALL_PATTERNS))
def test_matcher_agrees_with_brute_force(g: Graph, name: str):
    p = get_pattern(name)
    emb = contains_induced(g, p)
    assert (emb is not None) == brute_contains(g, p)
    if emb is not None:
        assert emb.revalidate(g, p)


def test_matcher_returns_least_images():
    c5 = Graph.cycle(5)
    emb = contains_induced(c5, get_pattern("p3"))
    assert emb.images == (0, 1, 2)
    every = list(find_induced(c5, get_pattern("p3")))
    assert every == sorted(every, key=lambda e: e.images)
    assert len(every) == 10


def test_placement_order_follows_pattern_degree():
    x1 = get_pattern("x1")
    order = placement_order(x1)
    assert order[0] == x1.index("v1")
    assert set(order[1:3]) == {x1.index("v3"), x1.index("u2")}
    assert sorted(order) == list(range(x1.n))
    assert placement_order(x1, {x1.index("u"): 0})[0] == x1.index("u")


@given(graphs(max_n=8), st.sampled_from(("p4", "diamond", "c4", "2k2", "codomino")))
def test_first_witness_is_least_occurrence(g: Graph, name: str):
    p = get_pattern(name)
    every = list(find_induced(g, p))
    emb = contains_induced(g, p)
    if not every:
        assert emb is None
        return
    assert emb.images == min(e.images for e in every)
    assert all(e.revalidate(g, p) for e in every)


def test_matcher_within_and_pinned():
    c5 = Graph.cycle(5)
    assert contains_induced(c5, get_pattern("p3"), within=VertexSet.of(0, 2, 4)) is None
    emb = contains_induced(c5, get_pattern("p3"), pinned={"v2": 3})
    assert emb["v2"] == 3
    with pytest.raises(UnknownPatternLabel):
        emb["u1"]


def test_optional_edges_match_both_ways():
    yfam = get_pattern("yfam")
    assert contains_induced(named("yfam"), yfam) is not None
    assert contains_induced(named("yfam+edge"), yfam) is not None


@given(graphs(max_n=7))
def test_membership_agrees_with_networkx(g: Graph):
    p3up2 = nx.disjoint_union(nx.path_graph(3), nx.path_graph(2))
    expected = not _induced_copy(g, nx.complete_graph(4)) and not _induced_copy(g, p3up2)
    membership = is_class_member(g)
    assert bool(membership) == expected
    if not membership:
        assert membership.witness.pattern in ("k4", "p3up2")


def test_membership_of_named_graphs():
    assert is_class_member(Graph.cycle(5))
    assert is_class_member(named("codomino"))
    assert is_class_member(named("x2"))
    assert not is_class_member(named("x1"))
    assert not is_class_member(Graph.complete(4))
    assert not is_class_member(Graph.path(3).disjoint_union(Graph.path(2)))


def test_bounds_membership():
    assert is_bounds_class_member(Graph.complete(5))
    assert not is_bounds_class_member(Graph.empty(4))


def test_patterns_found_in_catalog_order():
    found = [emb.pattern for emb in patterns_found(named("codomino"))]
    assert "codomino" in found
    assert found == [name for name in CATALOG_NAMES if name in found]
