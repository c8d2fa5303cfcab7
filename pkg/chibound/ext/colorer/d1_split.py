from chibound.ext.colorer.assembly import CaseOutcome, finish
from chibound.ext.colorer.trace import CaseId, CaseTrace
from chibound.ext.decompose import five_set_split
from chibound.lib.graph import Coloring, Graph
from chibound.lib.types import Vertex

__all__ = (
    "d1_split_outcome",
    "color_d1_split",
)


def d1_split_outcome(
    g: Graph, v1: Vertex, v2: Vertex, v3: Vertex, *, closed: bool = False
) -> CaseOutcome:
    """
    `v1v2` is an edge and `v3` a vertex adjacent to neither, all in `D1`.

    `{v1, v2} ∪ M(v1, v2)` takes two colors: in a (P3∪P2, K3∪P2)-free graph
    `M(v1, v2)` is a disjoint union of cliques of size at most two. The five
    parts of the joint neighborhood take one color each.
    """
    split = five_set_split(g, v1, v2, v3, closed=closed)
    outcome = CaseOutcome(CaseId.THM11)
    outcome.add(
        g.joint_complement_set(v1, v2).add(v1, v2), 2, "d1-split.m-two-colorable"
    )
    for i, part in enumerate(split.parts[:4], start=1):
        outcome.add(part, 1, f"d1-split.s{i}-edge-free-by-d1")
    outcome.add(split.s5, 1, "d1-split.s5-stable-by-k4-free")
    return outcome


def color_d1_split(
    g: Graph, v1: Vertex, v2: Vertex, v3: Vertex, *, closed: bool = False
) -> tuple[Coloring, CaseTrace]:
    return finish(g, d1_split_outcome(g, v1, v2, v3, closed=closed))
