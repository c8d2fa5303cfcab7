from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from chibound.ext.colorer.colorer_exceptions import ClaimViolation
from chibound.ext.colorer.trace import CaseId, CaseTrace, TracedSet
from chibound.ext.oracle import color_within
from chibound.ext.patterns import Embedding
from chibound.lib.constants import COLOR_BOUND
from chibound.lib.graph import Coloring, Graph, VertexSet, Witness, WitnessKind
from chibound.lib.types import Vertex

__all__ = (
    "ColorGroup",
    "CaseOutcome",
    "assemble",
    "finish",
    "require_edge_free",
    "require_at_most_edges",
    "require_stable",
    "require_complete",
    "require_anticomplete",
    "require_at_most",
    "require_empty",
    "neighborhood_witness",
)


@dataclass(frozen=True)
class ColorGroup:
    """
    A vertex set a case colors with its own fresh colors.

    Attributes
    ----------
    vertices
        The set. Vertices already placed by an earlier group are dropped, which
        keeps stability since subsets of stable sets are stable.
    budget
        How many colors the case allows for it.
    claim
        Why `budget` colors suffice.
    classes
        Explicit color classes, when the case constructs them itself.
    """

    vertices: VertexSet
    budget: int
    claim: str
    classes: Optional[tuple[VertexSet, ...]] = None


@dataclass
class CaseOutcome:
    case_id: CaseId
    groups: list[ColorGroup] = field(default_factory=list)
    witnesses: list[Embedding] = field(default_factory=list)

    def add(self, vertices: VertexSet, budget: int, claim: str):
        self.groups.append(ColorGroup(vertices, budget, claim))

    def add_classes(self, classes: Sequence[VertexSet], budget: int, claim: str):
        union = VertexSet()
        for c in classes:
            union |= c
        self.groups.append(ColorGroup(union, budget, claim, tuple(classes)))


def _edge_witness(g: Graph, s: VertexSet) -> Optional[Witness]:
    if edge := g.first_edge_within(s):
        return Witness.of(WitnessKind.ADJACENT_PAIR, edge)


def assemble(
    g: Graph, groups: Iterable[ColorGroup], case_id: CaseId
) -> tuple[Coloring, list[TracedSet]]:
    """
    Give each group fresh colors in order and check every step: each class is
    stable, no group exceeds its budget, the budgets stay within the overall
    bound, and together the groups cover `V(g)`.
    """
    groups = list(groups)
    if sum(group.budget for group in groups) > COLOR_BOUND:
        raise ClaimViolation(
            f"{case_id.value}.budget",
            Witness.of(WitnessKind.CARDINALITY, (), bound=COLOR_BOUND),
        )

    colors = [0] * g.n
    traced: list[TracedSet] = []
    placed = VertexSet()
    next_color = 1
    for group in groups:
        members = g.check_set(group.vertices) - placed
        if group.classes is not None:
            classes = [c - placed for c in group.classes]
            for c in classes:
                if witness := _edge_witness(g, c):
                    raise ClaimViolation(group.claim, witness)
        elif group.budget == 1 or not members:
            if witness := _edge_witness(g, members):
                raise ClaimViolation(group.claim, witness)
            classes = [members]
        else:
            found = color_within(g, members, group.budget)
            if found is None:
                raise ClaimViolation(
                    group.claim,
                    Witness.of(WitnessKind.NOT_COLORABLE, members, bound=group.budget),
                )
            classes = found
        classes = [c for c in classes if c]
        if len(classes) > group.budget:
            raise ClaimViolation(
                group.claim,
                Witness.of(WitnessKind.CARDINALITY, members, bound=group.budget),
            )
        for c in classes:
            for v in c:
                colors[v] = next_color
            traced.append(TracedSet(c, group.claim))
            next_color += 1
        placed |= members

    if uncovered := g.vertices - placed:
        raise ClaimViolation(
            f"{case_id.value}.covers-all",
            Witness.of(WitnessKind.UNCOVERED, uncovered),
        )
    return Coloring(tuple(colors)), traced


def finish(g: Graph, outcome: CaseOutcome) -> tuple[Coloring, CaseTrace]:
    coloring, traced = assemble(g, outcome.groups, outcome.case_id)
    trace = CaseTrace(
        case_id=outcome.case_id,
        stable_sets=traced,
        witnesses=list(outcome.witnesses),
    )
    return coloring, trace


# @@ CLAIM CHECKS


def require_edge_free(g: Graph, s: VertexSet, claim: str):
    if edge := g.first_edge_within(s):
        raise ClaimViolation(claim, Witness.of(WitnessKind.EDGE_COUNT, edge, bound=0))


def require_stable(g: Graph, s: VertexSet, claim: str):
    if witness := _edge_witness(g, s):
        raise ClaimViolation(claim, witness)


def require_at_most_edges(g: Graph, s: VertexSet, bound: int, claim: str):
    edges = list(g.edges_within(s))
    if len(edges) > bound:
        ends = VertexSet.from_iterable(v for e in edges[: bound + 1] for v in e)
        raise ClaimViolation(claim, Witness.of(WitnessKind.EDGE_COUNT, ends, bound=bound))


def require_complete(g: Graph, s1: VertexSet, s2: VertexSet, claim: str):
    if pair := g.first_non_edge_between(s1, s2):
        raise ClaimViolation(claim, Witness.of(WitnessKind.NONADJACENT_PAIR, pair))


def require_anticomplete(g: Graph, s1: VertexSet, s2: VertexSet, claim: str):
    if pair := g.first_edge_between(s1, s2):
        raise ClaimViolation(claim, Witness.of(WitnessKind.ADJACENT_PAIR, pair))


def require_at_most(s: VertexSet, bound: int, claim: str):
    if len(s) > bound:
        raise ClaimViolation(claim, Witness.of(WitnessKind.CARDINALITY, s, bound=bound))


def require_empty(s: VertexSet, claim: str, kind: WitnessKind = WitnessKind.CARDINALITY):
    if s:
        raise ClaimViolation(claim, Witness.of(kind, s, bound=0))


def neighborhood_witness(v: Vertex, among: Sequence[Vertex]) -> Witness:
    """`v` followed by the vertices whose adjacency to it broke a claim."""
    return Witness.of(WitnessKind.NEIGHBORHOOD, (v, *among))
