from typing import Optional

from chibound.ext.colorer.assembly import (
    CaseOutcome,
    finish,
    neighborhood_witness,
    require_at_most_edges,
)
from chibound.ext.colorer.colorer_exceptions import ClaimViolation
from chibound.ext.colorer.three_part import three_part_classes
from chibound.ext.colorer.trace import CaseId, CaseTrace
from chibound.ext.decompose import around_triangle
from chibound.ext.patterns import Embedding, contains_induced, get_pattern
from chibound.lib.graph import Coloring, Graph, VertexSet, Witness, WitnessKind

__all__ = (
    "cotwinc5_outcome",
    "color_cotwinc5",
)


def _y_outcome(g: Graph, emb: Embedding, y: Embedding, strict: bool) -> CaseOutcome:
    """Decompose around the triangle `(v1, v2, u)` of a Y-family member."""
    v1, v2, u = y.image("v1", "v2", "u")
    d = around_triangle(g, (v1, v2, u))
    require_at_most_edges(g, d.b2, 1, "cotwinc5.b2-one-edge")
    if not g.first_edge_within(d.b1_minus_a0):
        free, other = d.b1_minus_a0, d.b3
    elif not g.first_edge_within(d.b3):
        free, other = d.b3, d.b1_minus_a0
    else:
        ends = VertexSet.of(
            *g.first_edge_within(d.b1_minus_a0), *g.first_edge_within(d.b3)
        )
        raise ClaimViolation(
            "cotwinc5.b1-or-b3-edge-free",
            Witness.of(WitnessKind.EDGE_COUNT, ends, bound=0),
        )
    outcome = CaseOutcome(CaseId.COTWINC5_Y, witnesses=[emb, y])
    outcome.add(free, 1, "cotwinc5.edge-free-side-stable")
    outcome.add_classes(
        three_part_classes(g, d.b2, other, d.a0, strict=strict), 3, "three-part-claim"
    )
    for i, group in enumerate(d.split_groups(), start=1):
        outcome.add(group, 1, f"split{i}-stable-by-k4-free")
    return outcome


def _y_free_outcome(g: Graph, emb: Embedding) -> CaseOutcome:
    """
    `V = {v1, v2} ∪ (N(v1) ∪ N(v2)) ∪ M(v1, v2)`, with `v4` and `v6` in `M`.
    Every other joint neighbor must see an edge of `{v3, v4, v5, v6}`.
    """
    v1, v2, v3, v4, v5, v6 = emb.image("v1", "v2", "v3", "v4", "v5", "v6")
    hub = VertexSet.of(v3, v4, v5, v6)
    joint = (g.neighbors(v1) | g.neighbors(v2)) - VertexSet.of(v1, v2, v3, v5)
    for y in joint:
        seen = g.neighbors(y) & hub
        if len(seen) < 2 or g.first_edge_within(seen) is None:
            raise ClaimViolation(
                "cotwinc5.joint-neighbor-complete-to-hub-edge",
                neighborhood_witness(y, hub.to_list()),
            )
    outcome = CaseOutcome(CaseId.COTWINC5_YFREE, witnesses=[emb])
    outcome.add(
        g.joint_complement_set(v1, v2).discard(v4, v6).add(v1, v2),
        2,
        "cotwinc5.m-with-v1v2-two-colorable",
    )
    outcome.add(joint | hub, 5, "cotwinc5.joint-with-hub-five-colorable")
    return outcome


def cotwinc5_outcome(
    g: Graph, emb: Embedding, *, strict: bool = False, y: Optional[Embedding] = None
) -> CaseOutcome:
    if y is None:
        y = contains_induced(g, get_pattern("yfam"))
    if y is not None:
        return _y_outcome(g, emb, y, strict)
    return _y_free_outcome(g, emb)


def color_cotwinc5(
    g: Graph, emb: Embedding, *, strict: bool = False
) -> tuple[Coloring, CaseTrace]:
    """
    Color a graph containing co-twin-C5 at `emb`, through a Y-family member
    when there is one and through the joint-neighborhood split otherwise.
    """
    return finish(g, cotwinc5_outcome(g, emb, strict=strict))
