from dataclasses import dataclass, field
from logging import Logger, getLogger
from typing import Optional

from chibound.ext.bounds.bounds_exceptions import BoundsClassViolation
from chibound.ext.colorer import CaseTrace, ColorerOptions, color
from chibound.ext.patterns import is_bounds_class_member
from chibound.lib.graph import Graph, VertexSet
from chibound.lib.json_serializable import JsonSerializable

__all__ = (
    "CliqueCover",
    "require_bounds_member",
    "join_factors",
    "clique_cover",
)


log: Logger = getLogger(__name__)


@dataclass
class CliqueCover(JsonSerializable):
    """
    A partition of the vertices into cliques.

    Attributes
    ----------
    parts
        The cliques.
    factors
        The join factors of the graph, i.e. the components of its complement.
    traces
        For each factor, how its complement was colored.
    """

    parts: list[VertexSet]
    factors: list[VertexSet] = field(default_factory=list)
    traces: list[CaseTrace] = field(default_factory=list)

    def revalidate(self, g: Graph) -> bool:
        seen = VertexSet()
        for part in self.parts:
            if not part or not g.is_clique(part) or not seen.isdisjoint(part):
                return False
            seen |= part
        return seen == g.vertices

    # @implements JsonSerializable
    def to_json(self) -> dict:
        return {
            "parts": [p.to_json() for p in self.parts],
            "factors": [f.to_json() for f in self.factors],
            "cases": [t.case_id.value for t in self.traces],
        }


def require_bounds_member(g: Graph):
    membership = is_bounds_class_member(g)
    if not membership:
        assert membership.witness is not None
        raise BoundsClassViolation(membership.witness)


def join_factors(g: Graph) -> list[VertexSet]:
    """`g` is the join of the subgraphs induced on the components of its complement."""
    return g.complement().components()


def clique_cover(g: Graph, options: Optional[ColorerOptions] = None) -> CliqueCover:
    """
    Cover a (4K1, co-(P3∪P2))-free graph with at most 7 cliques.

    Each join factor is covered by coloring its complement, which is
    (P3∪P2, K4)-free. Cliques from different factors are complete to each
    other, so the `i`-th cliques of all factors merge into one.
    """
    require_bounds_member(g)
    cover = CliqueCover(parts=[], factors=join_factors(g))
    for factor in cover.factors:
        members = factor.to_list()
        coloring, trace = color(g.induced(factor).complement(), options)
        cover.traces.append(trace)
        for i, cls in enumerate(coloring.classes()):
            part = VertexSet.from_iterable(members[v] for v in cls)
            if i < len(cover.parts):
                cover.parts[i] |= part
            else:
                cover.parts.append(part)
    log.debug(
        f"{g.to_graph6()}: {len(cover.parts)} cliques over {len(cover.factors)} factors"
    )
    return cover
