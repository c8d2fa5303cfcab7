from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable, Optional, Self

from chibound.lib.exceptions import MalformedData
from chibound.lib.from_data_mixin import FromDataMixin
from chibound.lib.graph.graph import Graph
from chibound.lib.graph.vertex_set import VertexSet
from chibound.lib.json_serializable import JsonSerializable
from chibound.lib.types import Vertex
from chibound.lib.utils import dict_without_nones

__all__ = (
    "WitnessKind",
    "Witness",
)


class WitnessKind(Enum):
    ADJACENT_PAIR = "adjacent-pair"
    NONADJACENT_PAIR = "nonadjacent-pair"
    INDUCED_PATH = "induced-path"
    TRIANGLE = "triangle"
    HIGH_DEGREE = "high-degree"
    EDGE_COUNT = "edge-count"
    CARDINALITY = "cardinality"
    NOT_COLORABLE = "not-colorable"
    NEIGHBORHOOD = "neighborhood"
    EMBEDDING = "embedding"
    UNCOVERED = "uncovered"

    @property
    def replays_directly(self) -> bool:
        """
        Whether the witness alone shows the failure on the graph. The others only
        make sense relative to sets a case derived, and are replayed by re-running it.
        """
        return self not in (
            WitnessKind.CARDINALITY,
            WitnessKind.NEIGHBORHOOD,
            WitnessKind.UNCOVERED,
        )


@dataclass(frozen=True)
class Witness(JsonSerializable, FromDataMixin):
    """
    The concrete evidence that a structural claim failed.

    Attributes
    ----------
    kind
        What the vertices show.
    vertices
        The vertices concerned, in a kind-specific order: the pair, the path in
        path order, the high-degree vertex first followed by its neighbors, or the
        images of an embedding in pattern order.
    bound
        The bound that was exceeded, for the counting kinds.
    pattern
        The pattern name, for `EMBEDDING`.
    """

    kind: WitnessKind
    vertices: tuple[Vertex, ...]
    bound: Optional[int] = None
    pattern: Optional[str] = None

    @classmethod
    def of(
        cls,
        kind: WitnessKind,
        vertices: Iterable[Vertex] | VertexSet,
        bound: Optional[int] = None,
        pattern: Optional[str] = None,
    ) -> Self:
        return cls(kind, tuple(vertices), bound, pattern)

    # @overrides FromDataMixin
    @classmethod
    def try_from_data(cls, data: Any) -> Optional[Self]:
        if isinstance(data, dict):
            try:
                kind = WitnessKind(data["kind"])
            except (KeyError, ValueError):
                raise MalformedData(cls, data)
            return cls(
                kind=kind,
                vertices=tuple(int(v) for v in data.get("vertices", ())),
                bound=data.get("bound"),
                pattern=data.get("pattern"),
            )

    @property
    def vertex_set(self) -> VertexSet:
        return VertexSet.from_iterable(self.vertices)

    def holds_in(self, g: Graph) -> Optional[bool]:
        """
        Check the witness against `g` for the kinds that need nothing but the
        graph. Returns `None` for the kinds that need extra machinery.
        """
        vs = self.vertices
        if any(not (0 <= v < g.n) for v in vs):
            return False
        match self.kind:
            case WitnessKind.ADJACENT_PAIR:
                return len(vs) == 2 and g.adjacent(*vs)
            case WitnessKind.NONADJACENT_PAIR:
                return len(vs) == 2 and vs[0] != vs[1] and not g.adjacent(*vs)
            case WitnessKind.INDUCED_PATH:
                if len(set(vs)) != len(vs):
                    return False
                return all(
                    g.adjacent(vs[i], vs[j]) == (j == i + 1)
                    for i in range(len(vs))
                    for j in range(i + 1, len(vs))
                )
            case WitnessKind.TRIANGLE:
                return len(set(vs)) == 3 and g.is_clique(self.vertex_set)
            case WitnessKind.HIGH_DEGREE:
                return (
                    self.bound is not None
                    and len(vs) > 0
                    and g.degree_within(vs[0], VertexSet.from_iterable(vs[1:])) > self.bound
                )
            case WitnessKind.EDGE_COUNT:
                if self.bound is None:
                    return False
                return g.edge_count_within(self.vertex_set) > self.bound
        return None

    # @implements JsonSerializable
    def to_json(self) -> dict:
        return dict_without_nones(
            kind=self.kind.value,
            vertices=list(self.vertices),
            bound=self.bound,
            pattern=self.pattern,
        )
