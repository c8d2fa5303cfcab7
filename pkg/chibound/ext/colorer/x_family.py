from typing import Optional

from chibound.ext.colorer.assembly import (
    CaseOutcome,
    finish,
    require_anticomplete,
    require_complete,
)
from chibound.ext.colorer.colorer_exceptions import ClaimViolation
from chibound.ext.colorer.trace import CaseId, CaseTrace
from chibound.ext.decompose import InvalidConfiguration, around_triangle
from chibound.ext.patterns import Embedding
from chibound.lib.graph import Coloring, Graph, VertexSet, Witness, WitnessKind

__all__ = (
    "x_outcome",
    "color_x",
)


def _x1_outcome(g: Graph, emb: Embedding) -> CaseOutcome:
    """
    Outside the occurrence itself, `B1 - A0` sees `u` and `u3` but not `u1`/`u2`,
    `B3` sees `u` and `u1` but not `u2`/`u3`, and `B2` sees none of
    `u, u1, u2, u3`. At most one of `B1 - A0`, `B2`, `B3` carries edges.
    """
    v1, v2, v3, u1, u2, u3, u = emb.image("v1", "v2", "v3", "u1", "u2", "u3", "u")
    d = around_triangle(g, (v1, v2, v3))
    s = VertexSet.of
    b1 = d.b1_minus_a0 - s(u1, u)
    b2 = d.b2.discard(u)
    b3 = d.b3.discard(u3)
    require_anticomplete(g, b1, s(u1, u2), "x1.b1-anticomplete-to-u1u2")
    require_complete(g, b1, s(u, u3), "x1.b1-complete-to-u-u3")
    require_anticomplete(g, b3, s(u2, u3), "x1.b3-anticomplete-to-u2u3")
    require_complete(g, b3, s(u, u1), "x1.b3-complete-to-u-u1")
    require_anticomplete(g, b2, s(u1, u3), "x1.b2-anticomplete-to-u1u3")
    require_anticomplete(g, b2, s(u, u2), "x1.b2-anticomplete-to-u-u2")

    sides = (("b1-minus-a0", d.b1_minus_a0), ("b2", d.b2), ("b3", d.b3))
    for i, (name, part) in enumerate(sides):
        for other_name, other in sides[i + 1 :]:
            if g.first_edge_within(part) and g.first_edge_within(other):
                ends = VertexSet.of(*g.first_edge_within(part), *g.first_edge_within(other))
                raise ClaimViolation(
                    f"x1.{name}-or-{other_name}-edge-free",
                    Witness.of(WitnessKind.EDGE_COUNT, ends, bound=0),
                )
    outcome = CaseOutcome(CaseId.X1, witnesses=[emb])
    outcome.add(d.b1 | d.b2 | d.b3, 4, "x1.b-sets-four-colorable")
    for i, group in enumerate(d.split_groups(), start=1):
        outcome.add(group, 1, f"split{i}-stable-by-k4-free")
    return outcome


def _x2_outcome(g: Graph, emb: Embedding) -> CaseOutcome:
    """
    Cut `B1 ∪ B2 ∪ B3 - A0` by adjacency to `u1` and `u3`:
    `D1`/`D2` are the `B2 - {u}` vertices seeing both or only `u3`,
    `D3`/`D4` the `B1 - A0` vertices seeing only `u3` or both,
    `D5`/`D6` the `B3` vertices seeing `u1` or neither.
    """
    v1, v2, v3, u1, u2, u3, u = emb.image("v1", "v2", "v3", "u1", "u2", "u3", "u")
    d = around_triangle(g, (v1, v2, v3))
    s_u1, s_u2, s_u3 = VertexSet.of(u1), VertexSet.of(u2), VertexSet.of(u3)
    b2 = d.b2.discard(u)
    b1 = d.b1_minus_a0
    require_complete(g, b2, s_u3, "x2.b2-complete-to-u3")
    require_anticomplete(g, b2, s_u2, "x2.b2-anticomplete-to-u2")
    require_complete(g, b1, s_u3, "x2.b1-complete-to-u3")
    require_anticomplete(g, d.b3.discard(u3), s_u2 | s_u3, "x2.b3-anticomplete-to-u2u3")

    n_u1 = g.neighbors(u1)
    d1, d2 = b2 & n_u1, b2 - n_u1
    d4, d3 = b1 & n_u1, b1 - n_u1
    d5, d6 = d.b3 & n_u1, d.b3 - n_u1

    outcome = CaseOutcome(CaseId.X2, witnesses=[emb])
    outcome.add(d1 | d4, 1, "x2.d1-d4-stable")
    outcome.add((d2 | d3).add(u2), 1, "x2.d2-d3-with-u2-stable")
    outcome.add((d.a0.discard(u2) | d6).add(u), 1, "x2.a0-d6-with-u-stable")
    outcome.add(d5, 1, "x2.d5-stable")
    for i, group in enumerate(d.split_groups(), start=1):
        outcome.add(group, 1, f"split{i}-stable-by-k4-free")
    return outcome


def x_outcome(g: Graph, emb: Embedding, variant: Optional[str] = None) -> CaseOutcome:
    match variant or emb.pattern:
        case "x1":
            return _x1_outcome(g, emb)
        case "x2":
            return _x2_outcome(g, emb)
        case other:
            raise InvalidConfiguration(f"`{other}` is neither x1 nor x2")


def color_x(
    g: Graph, emb: Embedding, variant: Optional[str] = None
) -> tuple[Coloring, CaseTrace]:
    """
    Color a graph containing X1 or X2 at `emb`. The variant defaults to the
    pattern the embedding was found for.
    """
    return finish(g, x_outcome(g, emb, variant))
