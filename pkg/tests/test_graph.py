import networkx as nx
import pytest
from hypothesis import given

from chibound.lib.graph import (
    Coloring,
    Graph,
    Graph6ParseError,
    InvalidColoring,
    VertexSet,
    canonical_key,
    is_isomorphic,
    iter_graph6_lines,
    read_graph6_file,
    validate,
    write_graph6_file,
)
from tests.conftest import graphs, to_nx


def test_graph6_known_strings():
    assert Graph.from_graph6("Bw") == Graph.complete(3)
    assert Graph.complete(3).to_graph6() == "Bw"
    assert Graph.empty(0).to_graph6() == "?"


@given(graphs(min_n=1, max_n=8))
def test_graph6_matches_networkx(g: Graph):
    expected = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert g.to_graph6() == expected
    assert Graph.from_graph6(expected) == g


def test_graph6_rejects_garbage():
    with pytest.raises(Graph6ParseError):
        Graph.from_graph6("B")
    with pytest.raises(Graph6ParseError):
        Graph.from_graph6("B\x7f")


def test_iter_graph6_lines_skips_blanks_and_header():
    lines = [">>graph6<<Bw\n", "\n", "D?{\n"]
    parsed = list(iter_graph6_lines(lines))
    assert [g.n for g in parsed] == [3, 5]


def test_graph6_file_round_trip(tmp_path):
    path = tmp_path / "corpus.g6"
    corpus = [Graph.cycle(5), Graph.path(4), Graph.complete(3)]
    assert write_graph6_file(corpus, path) == 3
    assert read_graph6_file(path) == corpus


def test_neighborhoods_and_sets(c5: Graph):
    assert c5.neighbors(0) == VertexSet.of(1, 4)
    assert c5.non_neighbors(0) == VertexSet.of(2, 3)
    assert c5.is_stable(VertexSet.of(0, 2))
    assert not c5.is_clique(VertexSet.of(0, 1, 2))
    assert c5.complete_to(VertexSet.of(0), VertexSet.of(1, 4))
    assert c5.anticomplete_to(VertexSet.of(0), VertexSet.of(2, 3))
    assert c5.edge_count == 5


def test_joint_complement_set():
    c6 = Graph.cycle(6)
    assert c6.joint_complement_set(0, 1) == VertexSet.of(3, 4)
    assert Graph.complete(4).non_neighbors(0) == VertexSet.of()


def test_induced_relabels_in_order(c5: Graph):
    h = c5.induced(VertexSet.of(0, 1, 2))
    assert h == Graph.path(3)


@given(graphs())
def test_complement_is_involutive(g: Graph):
    assert g.complement().complement() == g
    assert g.edge_count + g.complement().edge_count == g.n * (g.n - 1) // 2


@given(graphs())
def test_components_match_networkx(g: Graph):
    ours = sorted(sorted(c) for c in g.components())
    theirs = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
    assert ours == theirs


@given(graphs(max_n=7), graphs(max_n=7))
def test_canonical_key_agrees_with_networkx(g: Graph, h: Graph):
    expected = g.n == h.n and nx.is_isomorphic(to_nx(g), to_nx(h))
    assert (canonical_key(g) == canonical_key(h)) == expected
    assert is_isomorphic(g, h) == expected


def test_canonical_key_ignores_labels():
    p4 = Graph.path(4)
    assert canonical_key(p4) == canonical_key(p4.relabel([2, 0, 3, 1]))


def test_validate_coloring(c5: Graph):
    assert validate(c5, Coloring((1, 2, 1, 2, 3)))
    assert not validate(c5, Coloring((1, 2, 1, 2, 1)))
    with pytest.raises(InvalidColoring):
        validate(c5, (1, 2, 1))


def test_coloring_from_classes(c5: Graph):
    c = Coloring.from_classes(5, [VertexSet.of(0, 2), VertexSet.of(1, 3), VertexSet.of(4)])
    assert c.k == 3
    assert c.conflict(c5) is None
