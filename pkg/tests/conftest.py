import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from chibound.core.campaigns import fuzz_member
from chibound.ext.generators import GenConfig
from chibound.lib.graph import Graph

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("ci", max_examples=300, deadline=None)
settings.load_profile("default")


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


@st.composite
def class_members(draw, min_n: int = 1, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32))
    found = fuzz_member(GenConfig(n, seed=seed), draw(st.integers(0, 3)), 8)
    if found is None:
        return Graph.empty(n)
    return found[0]


@pytest.fixture
def c5() -> Graph:
    return Graph.cycle(5)


@pytest.fixture
def k3_up2() -> Graph:
    return Graph.complete(3).disjoint_union(Graph.complete(2))


@pytest.fixture
def ledger_path(tmp_path):
    return tmp_path / "ledger.jsonl"
