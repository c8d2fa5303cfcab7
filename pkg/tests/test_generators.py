from fractions import Fraction
from random import Random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chibound.ext.generators import (
    GenConfig,
    GenerationFailure,
    InvalidGenConfig,
    enumerate_graphs,
    labeled_count,
    mutate,
    named,
    random_class_member,
    random_graph,
    repair,
)
from chibound.ext.patterns import (
    CATALOG_NAMES,
    UnknownPattern,
    get_pattern,
    is_class_member,
)
from chibound.lib.graph import Graph, UnsupportedSize, is_isomorphic
from tests.conftest import to_nx


@pytest.mark.parametrize(
    "n, dedup, count",
    [
        (0, False, 1),
        (1, False, 1),
        (3, False, 8),
        (3, True, 4),
        (4, True, 11),
        (5, True, 34),
    ],
)
def test_enumeration_counts(n: int, dedup: bool, count: int):
    assert sum(1 for _ in enumerate_graphs(n, dedup)) == count


def test_enumeration_order_and_limits():
    first, *_, last = list(enumerate_graphs(3))
    assert first == Graph.empty(3)
    assert last == Graph.complete(3)
    assert labeled_count(4) == 64
    with pytest.raises(UnsupportedSize):
        list(enumerate_graphs(8))


def test_dedup_matches_graph_atlas():
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == 5]
    ours = list(enumerate_graphs(5, dedup=True))
    assert len(ours) == len(atlas)
    for h in atlas:
        assert sum(1 for g in ours if nx.is_isomorphic(to_nx(g), h)) == 1


@pytest.mark.slow
@pytest.mark.parametrize("n, count", [(6, 156), (7, 1044)])
def test_dedup_counts_on_larger_orders(n: int, count: int):
    assert sum(1 for _ in enumerate_graphs(n, dedup=True)) == count


def test_gen_config_validation():
    with pytest.raises(InvalidGenConfig):
        GenConfig(-1)
    with pytest.raises(InvalidGenConfig):
        GenConfig(5, edge_probability=Fraction(3, 2))
    with pytest.raises(InvalidGenConfig):
        GenConfig(5, seed=-1)
    cfg = GenConfig.from_data({"n": 6, "edge_probability": "1/3", "seed": 9})
    assert cfg == GenConfig(6, Fraction(1, 3), 9)
    assert GenConfig.from_data(cfg.to_json()) == cfg


def test_random_graph_extremes():
    assert random_graph(GenConfig(6, Fraction(0)), Random(1)) == Graph.empty(6)
    assert random_graph(GenConfig(6, Fraction(1)), Random(1)) == Graph.complete(6)


@given(st.integers(0, 12), st.integers(0, 2**64 - 1))
def test_random_member_is_a_deterministic_member(n: int, seed: int):
    cfg = GenConfig(n, seed=seed)
    g = random_class_member(cfg)
    assert is_class_member(g)
    assert random_class_member(cfg) == g
    assert mutate(g, seed) == mutate(g, seed)
    assert is_class_member(mutate(g, seed))


def test_repair_clears_k4_and_gives_up_when_capped():
    assert is_class_member(repair(Graph.complete(4), Random(0)))
    with pytest.raises(GenerationFailure):
        repair(Graph.complete(6), Random(0), max_steps=0)


def test_named_graphs():
    for name in CATALOG_NAMES:
        assert is_isomorphic(named(name), get_pattern(name).graph)
    assert named(" CoDomino ") == named("codomino")
    with pytest.raises(UnknownPattern):
        named("nonesuch")
    with pytest.raises(UnknownPattern):
        named("c5+edge")
