from logging import Logger, getLogger
from typing import Optional

from chibound.ext.colorer.assembly import (
    CaseOutcome,
    finish,
    neighborhood_witness,
    require_at_most,
    require_at_most_edges,
    require_edge_free,
)
from chibound.ext.colorer.colorer_exceptions import ClaimViolation
from chibound.ext.colorer.three_part import three_part_classes
from chibound.ext.colorer.trace import CaseId, CaseTrace
from chibound.ext.decompose import TriangleDecomposition, around_triangle
from chibound.ext.patterns import Embedding, contains_induced, get_pattern
from chibound.lib.graph import Coloring, Graph, VertexSet, Witness, WitnessKind
from chibound.lib.types import Vertex

__all__ = (
    "CoDominoSplit",
    "codomino_outcome",
    "color_codomino",
)


log: Logger = getLogger(__name__)


class CoDominoSplit:
    """
    The decomposition around the triangle `(v1, v2, v3)` of a co-domino
    occurrence, with `B2` sorted by its neighbors among `u1, u2, u3`:
    `C1 ~ {u1, u2}`, `C2 ~ {u2, u3}`, `C3 ~ {u2}`, `C4 ~ {u1, u3}`.
    """

    def __init__(self, g: Graph, emb: Embedding):
        self.g: Graph = g
        self.emb: Embedding = emb
        self.v1, self.v2, self.v3, self.u1, self.u2, self.u3 = emb.image(
            "v1", "v2", "v3", "u1", "u2", "u3"
        )
        self.d: TriangleDecomposition = around_triangle(g, (self.v1, self.v2, self.v3))
        self.us: VertexSet = VertexSet.of(self.u1, self.u2, self.u3)

        require_edge_free(g, self.d.b2, "codomino.b2-edge-free")
        buckets = {
            VertexSet.of(self.u1, self.u2): [],
            VertexSet.of(self.u2, self.u3): [],
            VertexSet.of(self.u2): [],
            VertexSet.of(self.u1, self.u3): [],
        }
        for x in self.d.b2:
            seen = g.neighbors(x) & self.us
            if seen not in buckets:
                raise ClaimViolation(
                    "codomino.b2-neighborhood",
                    neighborhood_witness(x, self.us.to_list()),
                )
            buckets[seen].append(x)
        self.c1, self.c2, self.c3, self.c4 = (
            VertexSet.from_iterable(b) for b in buckets.values()
        )

    def u_neighbors(self, x: Vertex) -> VertexSet:
        return self.g.neighbors(x) & self.us

    def d_sets(self) -> tuple[VertexSet, VertexSet, VertexSet, VertexSet, VertexSet]:
        """
        `A2` cut by adjacency to the hole:
        `D1 = N(v1) ∩ N(v2) ∩ N(u2) ∩ N(u3)`, `D2 = N(v1) ∩ N(v2) ∩ N(u1) ∩ N(u3)`,
        `D3 = N(v2) ∩ N(v3) ∩ N(u1) ∩ N(u2)`, `D4 = N(v2) ∩ N(v3) ∩ N(u1) ∩ N(u3)`,
        `D5 = N(v1) ∩ N(v3)`, each inside `A2` and disjoint by that priority.
        """
        g, a2 = self.g, self.d.a2
        recipes = (
            (self.v1, self.v2, self.u2, self.u3),
            (self.v1, self.v2, self.u1, self.u3),
            (self.v2, self.v3, self.u1, self.u2),
            (self.v2, self.v3, self.u1, self.u3),
            (self.v1, self.v3),
        )
        taken = VertexSet()
        parts = []
        for recipe in recipes:
            part = (g.common_neighbors(*recipe) & a2) - taken
            parts.append(part)
            taken |= part
        if missing := a2 - taken:
            raise ClaimViolation(
                "codomino.d-sets-cover-a2",
                Witness.of(WitnessKind.NEIGHBORHOOD, missing),
            )
        return tuple(parts)


def _c1c2_outcome(s: CoDominoSplit, case_id: CaseId) -> CaseOutcome:
    d = s.d
    if s.c1:
        require_edge_free(s.g, d.b3, "codomino.c1-forces-b3-edge-free")
    if s.c2:
        require_edge_free(s.g, d.b1_minus_a0, "codomino.c2-forces-b1-edge-free")
    outcome = CaseOutcome(case_id, witnesses=[s.emb])
    outcome.add(d.b1 | d.b2 | d.b3, 4, "codomino.b-sets-four-colorable")
    for i, group in enumerate(d.split_groups(), start=1):
        outcome.add(group, 1, f"split{i}-stable-by-k4-free")
    return outcome


def _swapped(emb: Embedding) -> Embedding:
    # Exchanging v_i with u_i maps the co-domino onto itself.
    swap = {"v1": "u1", "v2": "u2", "v3": "u3", "u1": "v1", "u2": "v2", "u3": "v3"}
    return Embedding(
        emb.pattern, emb.labels, tuple(emb[swap.get(label, label)] for label in emb.labels)
    )


def _three_part_outcome(
    g: Graph, emb: Embedding, case_id: CaseId, *, b3_first: bool, strict: bool
) -> CaseOutcome:
    """
    Re-decompose around the occurrence's own co-domino and 3-color `B1 ∪ B3`
    from the part with at most one edge.
    """
    s = CoDominoSplit(g, emb)
    d = s.d
    one_edge, other = (d.b3, d.b1_minus_a0) if b3_first else (d.b1_minus_a0, d.b3)
    name = "b3" if b3_first else "b1-minus-a0"
    require_at_most_edges(g, one_edge, 1, f"{case_id.value.lower()}.{name}-one-edge")
    outcome = CaseOutcome(case_id, witnesses=[emb])
    outcome.add_classes(
        three_part_classes(g, one_edge, other, d.a0, strict=strict),
        3,
        "three-part-claim",
    )
    outcome.add(d.b2, 1, "codomino.b2-edge-free")
    for i, group in enumerate(d.split_groups(), start=1):
        outcome.add(group, 1, f"split{i}-stable-by-k4-free")
    return outcome


def _d_outcome(
    s: CoDominoSplit, case_edge: CaseId, case_empty: CaseId, x: Optional[Vertex]
) -> CaseOutcome:
    """
    The `D1..D5` assembly, split on whether some `D1` vertex sees some `D3` vertex.
    `x` is the co-domino3 vertex attached to `v2` and `u2`, when there is one.
    """
    g, d = s.g, s.d
    d1, d2, d3, d4, d5 = s.d_sets()
    xs = VertexSet.of(x) if x is not None else VertexSet()
    cross = g.first_edge_between(d1, d3)
    if cross is not None:
        w, w2 = cross
        i = (d.b1 | d.b3) - s.us
        nw = g.neighbors(w)
        nw2 = g.neighbors(w2)
        outcome = CaseOutcome(case_edge, witnesses=[s.emb])
        outcome.add(i - nw, 1, "codomino.i-outside-n-w-stable")
        outcome.add((i & nw) - nw2, 1, "codomino.i-in-n-w-outside-n-w2-stable")
        outcome.add((i & nw & nw2).add(s.u2), 1, "codomino.i-in-both-with-u2-stable")
        outcome.add(d1 | xs | VertexSet.of(s.u1, s.v3), 1, "codomino.d1-with-u1-v3-stable")
        outcome.add(d2 | d4 | (d.b2 - xs), 1, "codomino.d2-d4-b2-complete-to-u1u3")
        outcome.add(d3.add(s.u3, s.v1), 1, "codomino.d3-with-u3-v1-stable")
        outcome.add(d5.add(s.v2), 1, "codomino.d5-with-v2-stable")
        return outcome
    outcome = CaseOutcome(case_empty, witnesses=[s.emb])
    outcome.add(d1 | d3 | xs, 1, "codomino.d1-d3-stable")
    outcome.add(d2 | d4 | (d.b2 - xs), 1, "codomino.d2-d4-b2-complete-to-u1u3")
    outcome.add(d.b1.add(s.v2, s.v3), 2, "codomino.b1-with-v2-v3-two-colorable")
    outcome.add(d.b3.add(s.v1), 2, "codomino.b3-with-v1-two-colorable")
    outcome.add(d5, 1, "codomino.d5-stable")
    return outcome


def codomino_outcome(
    g: Graph, emb: Embedding, *, strict: bool = False, allow_swap: bool = True
) -> CaseOutcome:
    s = CoDominoSplit(g, emb)
    d = s.d
    if s.c1 or s.c2:
        return _c1c2_outcome(s, CaseId.CODOMINO_C1C2)

    require_at_most(s.c3, 1, "codomino.c3-at-most-one")

    lonely = [x for x in d.split(3) if len(s.u_neighbors(x)) == 1]
    if lonely and allow_swap:
        log.debug(f"vertex {lonely[0]} sees one hole vertex; swapping the triangles")
        swapped = CoDominoSplit(g, _swapped(emb))
        if not (swapped.c1 or swapped.c2):
            raise ClaimViolation(
                "codomino.swap-yields-c1c2",
                neighborhood_witness(lonely[0], s.us.to_list()),
            )
        return _c1c2_outcome(swapped, CaseId.CODOMINO_SWAPPED)

    if emb1 := contains_induced(g, get_pattern("codomino1")):
        return _three_part_outcome(g, emb1, CaseId.CODOMINO1, b3_first=True, strict=strict)
    if emb2 := contains_induced(g, get_pattern("codomino2")):
        return _three_part_outcome(g, emb2, CaseId.CODOMINO2, b3_first=False, strict=strict)
    if emb3 := contains_induced(g, get_pattern("codomino3")):
        s3 = CoDominoSplit(g, emb3)
        outcome = _d_outcome(
            s3, CaseId.CODOMINO3_D1D3_EDGE, CaseId.CODOMINO3_D1D3_EMPTY, emb3["x"]
        )
        outcome.witnesses.append(emb3)
        return outcome

    if s.c3:
        outcome = CaseOutcome(CaseId.CODOMINO_C3, witnesses=[emb])
        outcome.add(
            g.neighbors(s.v2) - VertexSet.of(s.v1, s.v3),
            2,
            "codomino.n-v2-two-colorable",
        )
        outcome.add(d.b1.add(s.v2, s.v3), 2, "codomino.b1-with-v2-v3-two-colorable")
        outcome.add(d.b3.add(s.v1), 2, "codomino.b3-with-v1-two-colorable")
        outcome.add(d.split(1), 1, "codomino.n-v1-n-v3-stable")
        return outcome

    return _d_outcome(s, CaseId.CODOMINO_NO_C3, CaseId.CODOMINO_NO_C3, None)


def color_codomino(
    g: Graph, emb: Embedding, *, strict: bool = False
) -> tuple[Coloring, CaseTrace]:
    """
    Color a graph containing co-domino at `emb` with at most 7 colors, following
    the case ladder on `B2`: a `C1`/`C2` vertex, the swapped triangle, the three
    co-domino extensions, a `C3` vertex, and finally the `D1..D5` assembly.
    """
    return finish(g, codomino_outcome(g, emb, strict=strict))
