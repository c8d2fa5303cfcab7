import pytest
from hypothesis import given, settings

from chibound.ext.colorer import (
    Anomaly,
    CaseId,
    ClaimViolation,
    ClassViolation,
    ColorerOptions,
    HypothesisViolation,
    color,
    color_chi37_coa,
    color_codomino,
    color_d1_split,
    color_d2_pair,
    color_x,
    cotwinc5_outcome,
    finish,
    replay_anomaly,
    three_part_color,
)
from chibound.ext.decompose import InvalidConfiguration
from chibound.ext.generators import named
from chibound.ext.oracle import exact_chromatic
from chibound.ext.patterns import contains_induced, get_pattern
from chibound.lib.graph import Graph, VertexSet, Witness, WitnessKind, validate
from tests.conftest import class_members


def _colored(g: Graph, options: ColorerOptions | None = None):
    coloring, trace = color(g, options)
    assert validate(g, coloring)
    assert trace.revalidate(g)
    return coloring, trace


@pytest.mark.parametrize(
    "g, case_id, k",
    [
        (Graph.cycle(5), CaseId.OMEGA_AT_MOST_2, 3),
        (named("codomino"), CaseId.CODOMINO_NO_C3, 3),
        (named("codomino").disjoint_union(Graph.empty(1)), CaseId.CODOMINO_NO_C3, 3),
        (named("coa"), CaseId.COA, 5),
        (named("coa").disjoint_union(Graph.empty(1)), CaseId.COA, 5),
        (named("cotwinc5"), CaseId.COTWINC5_YFREE, 5),
        (named("chi37"), CaseId.THM11, 4),
    ],
    ids=["c5", "codomino", "codomino+k1", "coa", "coa+k1", "cotwinc5", "chi37"],
)
def test_named_graphs_take_their_case(g: Graph, case_id: CaseId, k: int):
    coloring, trace = _colored(g)
    assert trace.case_id is case_id
    assert coloring.k == k
    assert not trace.anomalies


def test_triangle_goes_to_residual_search():
    coloring, trace = _colored(Graph.complete(3))
    assert trace.case_id is CaseId.RESIDUAL_EXACT
    assert coloring.k == 3


def test_k3_up2_goes_to_six_color_search(k3_up2: Graph):
    g = Graph.complete(3).disjoint_union(Graph.complete(3))
    for host in (g, k3_up2):
        coloring, trace = _colored(host)
        assert trace.case_id is CaseId.K3P2_FALLBACK
        assert coloring.k == 3


def test_non_member_is_rejected():
    with pytest.raises(ClassViolation) as exc:
        color(Graph.complete(4))
    assert exc.value.witness.pattern == "k4"
    with pytest.raises(ClassViolation):
        color(Graph.path(3).disjoint_union(Graph.path(2)))


def test_x_variants_directly():
    for name, case_id, k in (("x1", CaseId.X1, 5), ("x2", CaseId.X2, 6)):
        g = named(name)
        emb = contains_induced(g, get_pattern(name))
        coloring, trace = color_x(g, emb)
        assert validate(g, coloring)
        assert trace.case_id is case_id
        assert coloring.k == k


def test_x_rejects_other_patterns():
    g = named("codomino")
    emb = contains_induced(g, get_pattern("codomino"))
    with pytest.raises(InvalidConfiguration):
        color_x(g, emb)


def test_codomino_extension_directly():
    g = named("codomino1")
    emb = contains_induced(g, get_pattern("codomino"))
    coloring, trace = color_codomino(g, emb)
    assert validate(g, coloring)
    assert trace.case_id is CaseId.CODOMINO1
    assert coloring.k <= 7


def _extended(g: Graph, added: int, edges) -> Graph:
    return Graph.from_edges(g.n + added, [*g.edges(), *edges])


def _checked(g: Graph, result):
    coloring, trace = result
    assert validate(g, coloring)
    assert trace.revalidate(g)
    return coloring, trace


def test_x1_with_pendant_on_v2():
    g = _extended(named("x1"), 1, [(1, 7)])
    emb = contains_induced(g, get_pattern("x1"))
    coloring, trace = _checked(g, color_x(g, emb))
    assert trace.case_id is CaseId.X1
    assert coloring.k == 5


def test_x1_checks_b1_adjacency():
    # 7 sees v1 only, so it lands in B1 - A0 without seeing u or u3.
    g = _extended(named("x1"), 1, [(0, 7)])
    emb = contains_induced(g, get_pattern("x1"))
    with pytest.raises(ClaimViolation) as exc:
        color_x(g, emb)
    assert exc.value.claim_id == "x1.b1-complete-to-u-u3"


def test_chi37_case_directly():
    g = named("chi37")
    emb = contains_induced(g, get_pattern("chi37"))
    coloring, trace = _checked(g, color_chi37_coa(g, emb))
    assert trace.case_id is CaseId.CHI37
    assert coloring.k == 5


def test_cotwinc5_through_y_member():
    # 7 sees u2, u and v2, closing a C5 with a co-twin inside the Y member.
    g = _extended(named("yfam"), 1, [(1, 7), (4, 7), (6, 7)])
    emb = contains_induced(g, get_pattern("cotwinc5"))
    assert emb is not None
    yfam = get_pattern("yfam")
    y = contains_induced(g, yfam, pinned=dict(zip(yfam.labels, range(7))))
    assert y is not None
    coloring, trace = _checked(g, finish(g, cotwinc5_outcome(g, emb, y=y)))
    assert trace.case_id is CaseId.COTWINC5_Y
    assert coloring.k == 6


@pytest.mark.parametrize(
    "name, case_id, k",
    [
        ("codomino2", CaseId.CODOMINO2, 7),
        ("codomino3", CaseId.CODOMINO3_D1D3_EMPTY, 5),
    ],
)
def test_codomino_extensions_take_their_case(name: str, case_id: CaseId, k: int):
    g = named(name)
    emb = contains_induced(g, get_pattern("codomino"))
    coloring, trace = _checked(g, color_codomino(g, emb))
    assert trace.case_id is case_id
    assert coloring.k == k


def test_codomino_with_vertex_on_v2_and_u2():
    g = _extended(named("codomino"), 1, [(1, 6), (4, 6)])
    emb = contains_induced(g, get_pattern("codomino"))
    coloring, trace = _checked(g, color_codomino(g, emb))
    assert trace.case_id is CaseId.CODOMINO_C3
    assert coloring.k == 4


def test_d2_pair_with_stable_common_neighborhood():
    # Triangle 0-2-3 with 1 hanging off 2.
    g = Graph.from_edges(4, [(0, 2), (0, 3), (2, 3), (1, 2)])
    coloring, trace = _checked(g, color_d2_pair(g, 0, 1))
    assert trace.case_id is CaseId.THM13_SMALL_OMEGA
    assert coloring.k == 4


def test_d2_pair_on_c4():
    g = Graph.cycle(4)
    coloring, trace = _checked(g, color_d2_pair(g, 0, 2))
    assert trace.case_id is CaseId.THM13_OMEGA2
    assert coloring.k == 2


def test_d2_pair_with_triangle_off_second_neighborhood():
    g = Graph.from_edges(6, [(2, 3), (3, 4), (2, 4), (1, 5), (2, 5)])
    coloring, trace = _checked(g, color_d2_pair(g, 0, 1))
    assert trace.case_id is CaseId.THM13_OMEGA2
    assert coloring.k == 4


def test_d2_pair_needs_nonadjacent_pair():
    with pytest.raises(InvalidConfiguration):
        color_d2_pair(Graph.cycle(4), 0, 1)


def test_d1_split_on_p2_up1():
    g = Graph.from_edges(3, [(0, 1)])
    coloring, trace = color_d1_split(g, 0, 1, 2)
    assert validate(g, coloring)
    assert trace.case_id is CaseId.THM11
    assert coloring.k == 2


def test_three_part_on_trivial_parts():
    g = Graph.cycle(5)
    coloring = three_part_color(g, VertexSet.of(0, 2), VertexSet.of(1, 3), VertexSet.of(4))
    assert validate(g, coloring)
    assert coloring.k <= 3


def test_three_part_rejects_triangle_in_first_part():
    g = Graph.complete(3)
    with pytest.raises(HypothesisViolation):
        three_part_color(g, g.vertices, VertexSet(), VertexSet())


def test_three_part_requires_cover():
    with pytest.raises(InvalidConfiguration):
        three_part_color(Graph.cycle(5), VertexSet.of(0), VertexSet.of(1), VertexSet.of(2))


def test_direct_witnesses_replay():
    g = Graph.complete(3)
    anomaly = Anomaly(
        graph6=g.to_graph6(),
        claim_id="three-part.v3-stable",
        witness=Witness.of(WitnessKind.EDGE_COUNT, (0, 1), bound=0),
        case_id=CaseId.COA,
    )
    assert replay_anomaly(anomaly)
    bogus = Anomaly(
        graph6=g.to_graph6(),
        claim_id="three-part.v3-stable",
        witness=Witness.of(WitnessKind.EDGE_COUNT, (0, 1, 2), bound=5),
        case_id=CaseId.COA,
    )
    assert not replay_anomaly(bogus)


@settings(max_examples=80)
@given(class_members(max_n=9))
def test_color_is_proper_and_within_bounds(g: Graph):
    for options in (ColorerOptions(), ColorerOptions(closed_neighborhood=True)):
        coloring, trace = _colored(g, options)
        assert exact_chromatic(g).value <= coloring.k <= 7
        if trace.anomalies:
            assert trace.case_id is CaseId.FALLBACK_EXACT
            assert trace.attempted


@pytest.mark.slow
def test_every_member_on_seven_vertices():
    from chibound.ext.generators import enumerate_graphs
    from chibound.ext.patterns import is_class_member

    for g in enumerate_graphs(7, dedup=True):
        if not is_class_member(g):
            continue
        coloring, trace = _colored(g)
        assert not trace.anomalies, trace.to_json()
        assert exact_chromatic(g).value <= coloring.k <= 7
