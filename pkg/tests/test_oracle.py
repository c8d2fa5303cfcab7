import networkx as nx
import pytest
from hypothesis import given

from chibound.ext.oracle import (
    InvalidColorBudget,
    clique_number,
    color_within,
    exact_chromatic,
    independence_number,
    k_colorable,
)
from chibound.lib.graph import Graph, VertexSet, validate
from tests.conftest import graphs, to_nx


@given(graphs(max_n=8))
def test_clique_number_agrees_with_networkx(g: Graph):
    result = clique_number(g)
    expected = max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)
    assert result.value == expected
    assert result.revalidate(g)


@given(graphs(max_n=7))
def test_exact_chromatic_is_tight(g: Graph):
    result = exact_chromatic(g)
    assert result.revalidate(g)
    assert validate(g, result.certificate)
    if result.value > 1:
        assert k_colorable(g, result.value - 1) is None


@given(graphs(max_n=8))
def test_independence_is_complement_clique(g: Graph):
    assert independence_number(g).value == clique_number(g.complement()).value


def test_known_values():
    assert exact_chromatic(Graph.cycle(5)).value == 3
    assert exact_chromatic(Graph.complete(4)).value == 4
    assert exact_chromatic(Graph.empty(3)).value == 1
    assert exact_chromatic(Graph.empty(0)).value == 0
    assert clique_number(Graph.cycle(5)).value == 2


def test_color_within_restricts():
    c5 = Graph.cycle(5)
    classes = color_within(c5, VertexSet.of(0, 1, 2, 3), 2)
    assert classes is not None
    assert all(c5.is_stable(c) for c in classes)
    assert color_within(c5, c5.vertices, 2) is None


def test_negative_budget():
    with pytest.raises(InvalidColorBudget):
        k_colorable(Graph.cycle(5), -1)
