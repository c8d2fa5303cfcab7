from typing import Optional

from chibound.ext.colorer.assembly import (
    CaseOutcome,
    finish,
    require_complete,
    require_edge_free,
)
from chibound.ext.colorer.colorer_exceptions import ClaimViolation
from chibound.ext.colorer.three_part import three_part_classes
from chibound.ext.colorer.trace import CaseId, CaseTrace
from chibound.ext.decompose import InvalidConfiguration, around_triangle
from chibound.ext.patterns import Embedding
from chibound.lib.graph import Coloring, Graph, VertexSet, Witness, WitnessKind

__all__ = (
    "chi37_coa_outcome",
    "color_chi37_coa",
)


def _chi37_outcome(g: Graph, emb: Embedding, strict: bool) -> CaseOutcome:
    d = around_triangle(g, emb.image("v1", "v2", "v3"))
    require_edge_free(g, d.b2, "chi37.b2-edge-free")
    if not g.first_edge_within(d.b3):
        free, other = d.b3, d.b1_minus_a0
    elif not g.first_edge_within(d.b1_minus_a0):
        free, other = d.b1_minus_a0, d.b3
    else:
        ends = VertexSet.of(*g.first_edge_within(d.b3), *g.first_edge_within(d.b1_minus_a0))
        raise ClaimViolation(
            "chi37.b1-or-b3-edge-free",
            Witness.of(WitnessKind.EDGE_COUNT, ends, bound=0),
        )
    outcome = CaseOutcome(CaseId.CHI37, witnesses=[emb])
    outcome.add(d.b2, 1, "chi37.b2-edge-free")
    outcome.add_classes(
        three_part_classes(g, free, other, d.a0, strict=strict), 3, "three-part-claim"
    )
    for i, group in enumerate(d.split_groups(), start=1):
        outcome.add(group, 1, f"split{i}-stable-by-k4-free")
    return outcome


def _coa_outcome(g: Graph, emb: Embedding) -> CaseOutcome:
    """
    `B2` is complete to `{u1, u3}` and so edge-free. Each edge of `B1 - A0` has
    an endpoint complete to `{u1, u3}`; those endpoints join `B2`.
    """
    d = around_triangle(g, emb.image("v1", "v2", "v3"))
    ends = VertexSet.of(*emb.image("u1", "u3"))
    require_complete(g, d.b2, ends, "coa.b2-complete-to-u1u3")
    b1 = d.b1_minus_a0
    seeing = VertexSet.from_iterable(x for x in b1 if ends <= g.neighbors(x))
    for a, b in g.edges_within(b1):
        if a not in seeing and b not in seeing:
            raise ClaimViolation(
                "coa.b1-edge-has-endpoint-complete-to-u1u3",
                Witness.of(WitnessKind.NEIGHBORHOOD, (a, b, *ends)),
            )
    outcome = CaseOutcome(CaseId.COA, witnesses=[emb])
    outcome.add(d.b2 | seeing, 1, "coa.b2-with-complete-b1-stable")
    outcome.add(b1 - seeing, 1, "coa.rest-of-b1-stable")
    outcome.add(d.b3 | d.a0, 2, "coa.b3-a0-two-colorable")
    for i, group in enumerate(d.split_groups(), start=1):
        outcome.add(group, 1, f"split{i}-stable-by-k4-free")
    return outcome


def chi37_coa_outcome(
    g: Graph, emb: Embedding, variant: Optional[str] = None, *, strict: bool = False
) -> CaseOutcome:
    match variant or emb.pattern:
        case "chi37":
            return _chi37_outcome(g, emb, strict)
        case "coa":
            return _coa_outcome(g, emb)
        case other:
            raise InvalidConfiguration(f"`{other}` is neither chi37 nor coa")


def color_chi37_coa(
    g: Graph, emb: Embedding, variant: Optional[str] = None, *, strict: bool = False
) -> tuple[Coloring, CaseTrace]:
    return finish(g, chi37_coa_outcome(g, emb, variant, strict=strict))
