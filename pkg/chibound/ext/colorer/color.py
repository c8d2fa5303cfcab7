from logging import Logger, getLogger
from typing import Callable, Iterator, Optional

from chibound.ext.colorer.assembly import CaseOutcome, finish
from chibound.ext.colorer.chi37_coa import chi37_coa_outcome
from chibound.ext.colorer.codomino import codomino_outcome
from chibound.ext.colorer.colorer_exceptions import ClaimViolation, ClassViolation
from chibound.ext.colorer.colorer_options import ColorerOptions
from chibound.ext.colorer.cotwinc5 import cotwinc5_outcome
from chibound.ext.colorer.d1_split import d1_split_outcome
from chibound.ext.colorer.d2_pair import d2_pair_outcome
from chibound.ext.colorer.trace import Anomaly, CaseId, CaseTrace, TracedSet
from chibound.ext.colorer.x_family import x_outcome
from chibound.ext.decompose import d1d2
from chibound.ext.oracle import clique_number, exact_chromatic
from chibound.ext.patterns import contains_induced, get_pattern, is_class_member
from chibound.lib.constants import (
    COLOR_BOUND,
    K3P2_COLOR_BOUND,
    TRIANGLE_FREE_COLOR_BOUND,
)
from chibound.lib.graph import Coloring, Graph, VertexSet, Witness, WitnessKind
from chibound.lib.types import Vertex

__all__ = (
    "CLAIM_OMEGA2",
    "CLAIM_K3P2",
    "CLAIM_RESIDUAL",
    "color",
)


log: Logger = getLogger(__name__)


CLAIM_OMEGA2 = "omega2-three-colorable"
CLAIM_K3P2 = "k3p2-six-colorable"
CLAIM_RESIDUAL = "seven-colorable"

# A structural stage: the case it enters under, and how to build its outcome.
Stage = tuple[CaseId, Callable[[], CaseOutcome]]


def _exact(
    g: Graph, case_id: CaseId, cap: int, claim_id: str
) -> tuple[Coloring, CaseTrace]:
    """Exact search, recording an anomaly when χ exceeds `cap`."""
    coloring = exact_chromatic(g).certificate
    assert isinstance(coloring, Coloring)
    trace = CaseTrace(
        case_id=case_id,
        stable_sets=[TracedSet(c, "exact-search") for c in coloring.classes()],
    )
    if coloring.k > cap:
        anomaly = Anomaly(
            graph6=g.to_graph6(),
            claim_id=claim_id,
            witness=Witness.of(WitnessKind.NOT_COLORABLE, g.vertices, bound=cap),
            case_id=case_id,
        )
        log.warning(f"{g.to_graph6()}: χ = {coloring.k} exceeds {cap} ({claim_id})")
        trace.anomalies.append(anomaly)
    return coloring, trace


def _least_non_edge(g: Graph, s: VertexSet) -> Optional[tuple[Vertex, Vertex]]:
    members = s.to_list()
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            if not g.adjacent(u, v):
                return u, v


def _stages(g: Graph, options: ColorerOptions) -> Iterator[Stage]:
    """
    The structural cases in dispatch order. Each stage is looked for only after
    every earlier one came up empty, so later cases may assume the freeness
    that this establishes.
    """
    strict = options.strict_three_part
    partition = d1d2(g, options.closed_neighborhood)

    if emb := contains_induced(g, get_pattern("p2up1"), within=partition.d1):
        v1, v2, v3 = emb.image("a1", "a2", "b1")
        yield CaseId.THM11, lambda: d1_split_outcome(
            g, v1, v2, v3, closed=options.closed_neighborhood
        )
        return
    if emb := contains_induced(g, get_pattern("codomino")):
        yield CaseId.CODOMINO_C1C2, lambda: codomino_outcome(g, emb, strict=strict)
        return
    for name, case_id in (("x1", CaseId.X1), ("x2", CaseId.X2)):
        if emb := contains_induced(g, get_pattern(name)):
            yield case_id, lambda: x_outcome(g, emb)
            return
    if emb := contains_induced(g, get_pattern("cotwinc5")):
        y = contains_induced(g, get_pattern("yfam"))
        case_id = CaseId.COTWINC5_YFREE if y is None else CaseId.COTWINC5_Y
        yield case_id, lambda: cotwinc5_outcome(g, emb, strict=strict, y=y)
        return
    for name, case_id in (("chi37", CaseId.CHI37), ("coa", CaseId.COA)):
        if emb := contains_induced(g, get_pattern(name)):
            yield case_id, lambda: chi37_coa_outcome(g, emb, strict=strict)
            return
    if pair := _least_non_edge(g, partition.d2):
        yield CaseId.THM13_SMALL_OMEGA, lambda: d2_pair_outcome(g, *pair)


def color(
    g: Graph, options: Optional[ColorerOptions] = None
) -> tuple[Coloring, CaseTrace]:
    """
    Color a (P3∪P2, K4)-free graph with at most 7 colors.

    Graphs with `ω ≤ 2` and graphs containing K3∪P2 go to exact search. The rest
    go to the first structural case that applies, or to exact search when none
    does. A claim that fails inside a case is recorded as an `Anomaly` and the
    graph falls through to exact search, so the result is always proper.

    Raises `ClassViolation` for graphs outside the class.
    """
    options = options or ColorerOptions()
    membership = is_class_member(g)
    if not membership:
        assert membership.witness is not None
        raise ClassViolation(membership.witness)

    if clique_number(g).value <= 2:
        return _exact(g, CaseId.OMEGA_AT_MOST_2, TRIANGLE_FREE_COLOR_BOUND, CLAIM_OMEGA2)
    if contains_induced(g, get_pattern("k3up2")):
        return _exact(g, CaseId.K3P2_FALLBACK, K3P2_COLOR_BOUND, CLAIM_K3P2)

    for entry, build in _stages(g, options):
        outcome: Optional[CaseOutcome] = None
        try:
            outcome = build()
            coloring, trace = finish(g, outcome)
        except ClaimViolation as ex:
            case_id = outcome.case_id if outcome is not None else entry
            anomaly = Anomaly(
                graph6=g.to_graph6(),
                claim_id=ex.claim_id,
                witness=ex.witness,
                case_id=case_id,
            )
            log.warning(f"{anomaly.graph6}: {ex} in {case_id.value}; using exact search")
            coloring, trace = _exact(g, CaseId.FALLBACK_EXACT, COLOR_BOUND, CLAIM_RESIDUAL)
            trace.attempted.append(case_id)
            trace.anomalies.insert(0, anomaly)
            return coloring, trace
        log.debug(f"{g.to_graph6()}: {trace.case_id.value} with {coloring.k} colors")
        return coloring, trace

    return _exact(g, CaseId.RESIDUAL_EXACT, COLOR_BOUND, CLAIM_RESIDUAL)
