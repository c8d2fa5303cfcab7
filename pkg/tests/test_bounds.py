import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chibound.ext.bounds import (
    CHECK_CHI,
    CHECK_ORDER,
    BoundsClassViolation,
    clique_cover,
    complement_bridge_holds,
    join_factors,
    random_bounds_member,
    verify_chi_bound,
    verify_order_bound,
)
from chibound.ext.generators import GenConfig
from chibound.lib.graph import Graph
from tests.conftest import graphs


@pytest.mark.parametrize(
    "g, parts",
    [
        (Graph.complete(5), 1),
        (Graph.cycle(5), 3),
        (Graph.complete(2).disjoint_union(Graph.complete(2)), 2),
    ],
    ids=["k5", "c5", "2k2"],
)
def test_clique_cover_sizes(g: Graph, parts: int):
    cover = clique_cover(g)
    assert cover.revalidate(g)
    assert len(cover.parts) == parts


def test_join_factors_of_complete_graph():
    assert len(join_factors(Graph.complete(5))) == 5
    assert len(join_factors(Graph.cycle(5))) == 1


def test_bounds_reject_non_members():
    with pytest.raises(BoundsClassViolation):
        clique_cover(Graph.empty(4))
    with pytest.raises(BoundsClassViolation):
        verify_order_bound(Graph.empty(4))


def test_bound_reports():
    order = verify_order_bound(Graph.cycle(5))
    assert (order.check, order.omega, order.value, order.limit) == (CHECK_ORDER, 2, 5, 14)
    assert order.passed and order.margin == 9
    chi = verify_chi_bound(Graph.cycle(5))
    assert (chi.check, chi.value, chi.limit) == (CHECK_CHI, 3, 8)
    assert chi.to_json()["passed"] is True


@given(graphs(max_n=7))
def test_complement_bridge(g: Graph):
    assert complement_bridge_holds(g)


@settings(max_examples=40)
@given(st.integers(1, 10), st.integers(0, 2**32))
def test_random_bounds_members_meet_the_bounds(n: int, seed: int):
    g = random_bounds_member(GenConfig(n, seed=seed))
    cover = clique_cover(g)
    assert cover.revalidate(g)
    assert len(cover.parts) <= 7
    assert verify_order_bound(g).passed
    assert verify_chi_bound(g).passed
