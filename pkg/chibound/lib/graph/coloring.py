from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Self, Sequence

from chibound.lib.graph.graph import Graph
from chibound.lib.graph.graph_exceptions import InvalidColoring, OverlappingSets
from chibound.lib.graph.vertex_set import VertexSet
from chibound.lib.json_serializable import JsonSerializable
from chibound.lib.types import Edge, Vertex

__all__ = (
    "Coloring",
    "validate",
)


@dataclass(frozen=True)
class Coloring(JsonSerializable):
    """
    A total assignment of colors `1..k` to the vertices `0..n-1`.

    Attributes
    ----------
    assignment
        `assignment[v]` is the color of vertex `v`.
    """

    assignment: tuple[int, ...]

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[VertexSet]) -> Self:
        """
        Build a coloring from disjoint color classes; empty classes are skipped so
        colors stay contiguous. Raises `InvalidColoring` unless every vertex is
        covered.
        """
        colors = [0] * n
        color = 0
        seen = VertexSet()
        for cls_ in classes:
            if not cls_:
                continue
            if not seen.isdisjoint(cls_):
                raise OverlappingSets(seen & cls_)
            seen |= cls_
            color += 1
            for v in cls_:
                if v >= n:
                    raise InvalidColoring(f"class member {v} outside 0..{n - 1}")
                colors[v] = color
        if missing := [v for v, c in enumerate(colors) if c == 0]:
            raise InvalidColoring(f"vertices {missing} received no color")
        return cls(tuple(colors))

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[Vertex, int]) -> Self:
        if missing := [v for v in range(n) if v not in mapping]:
            raise InvalidColoring(
                f"assignment is partial; vertices {missing} have no color"
            )
        return cls(tuple(mapping[v] for v in range(n)))

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def k(self) -> int:
        """The number of distinct colors used."""
        return len(set(self.assignment))

    def color_of(self, v: Vertex) -> int:
        return self.assignment[v]

    def classes(self) -> list[VertexSet]:
        """Color classes ordered by color."""
        by_color: dict[int, int] = {}
        for v, c in enumerate(self.assignment):
            by_color[c] = by_color.get(c, 0) | 1 << v
        return [VertexSet(by_color[c]) for c in sorted(by_color)]

    def conflict(self, g: Graph) -> Optional[Edge]:
        """The first monochromatic edge of `g`, if any."""
        for u, v in g.edges():
            if self.assignment[u] == self.assignment[v]:
                return (u, v)

    # @implements JsonSerializable
    def to_json(self) -> dict[str, int]:
        return {str(v): c for v, c in enumerate(self.assignment)}


def validate(g: Graph, c: Coloring | Sequence[Optional[int]]) -> bool:
    """
    True iff `c` is a proper coloring of `g`.

    Raises `InvalidColoring` when the assignment is not total on `V(g)` or uses a
    color outside the positive integers.
    """
    assignment = c.assignment if isinstance(c, Coloring) else tuple(c)
    if len(assignment) != g.n:
        raise InvalidColoring(f"assignment covers {len(assignment)} of {g.n} vertices")
    for v, color in enumerate(assignment):
        if color is None:
            raise InvalidColoring(f"vertex {v} has no color")
        if not isinstance(color, int) or color < 1:
            raise InvalidColoring(f"vertex {v} has color {color!r}; colors start at 1")
    return all(assignment[u] != assignment[v] for u, v in g.edges())
