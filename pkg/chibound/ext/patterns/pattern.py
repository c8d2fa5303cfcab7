from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from chibound.ext.patterns.patterns_exceptions import (
    InvalidPattern,
    UnknownPatternLabel,
)
from chibound.lib.graph import Graph, VertexSet
from chibound.lib.json_serializable import JsonSerializable
from chibound.lib.types import Bits, Edge, Vertex

__all__ = (
    "Pattern",
    "Embedding",
)


@dataclass(frozen=True)
class Pattern(JsonSerializable):
    """
    A named graph to look for as an induced subgraph.

    Attributes
    ----------
    name
        The stable CLI-visible identifier.
    graph
        The required edges. Every pair that is neither an edge here nor listed in
        `optional_edges` is a required non-edge.
    labels
        One role label per pattern vertex (`v1`, `u2`, ...), so that callers can
        address embedded vertices by the role they play.
    optional_edges
        Pairs that may be present or absent, for pattern families.
    """

    name: str
    graph: Graph
    labels: tuple[str, ...]
    optional_edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if len(self.labels) != self.graph.n:
            raise InvalidPattern(
                self.name, f"{len(self.labels)} labels for {self.graph.n} vertices"
            )
        if len(set(self.labels)) != len(self.labels):
            raise InvalidPattern(self.name, "duplicate vertex labels")
        for u, v in self.optional_edges:
            if u >= v:
                raise InvalidPattern(self.name, f"optional pair {(u, v)} is not ordered")
            if self.graph.adjacent(u, v):
                raise InvalidPattern(
                    self.name, f"optional pair {(u, v)} is also a required edge"
                )

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def optional_rows(self) -> tuple[Bits, ...]:
        rows = [0] * self.n
        for u, v in self.optional_edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    @cached_property
    def label_index(self) -> Mapping[str, Vertex]:
        return {label: i for i, label in enumerate(self.labels)}

    def index(self, label: str) -> Vertex:
        try:
            return self.label_index[label]
        except KeyError:
            raise UnknownPatternLabel(self.name, label) from None

    def is_optional(self, u: Vertex, v: Vertex) -> bool:
        return bool(self.optional_rows[u] >> v & 1)

    def with_optional_edges(self) -> Graph:
        """The family member with every optional edge present."""
        edges = list(self.graph.edges()) + sorted(self.optional_edges)
        return Graph.from_edges(self.n, edges)

    # @implements JsonSerializable
    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "labels": list(self.labels),
            "edges": [[self.labels[u], self.labels[v]] for u, v in self.graph.edges()],
            "optional_edges": [
                [self.labels[u], self.labels[v]] for u, v in sorted(self.optional_edges)
            ],
        }


@dataclass(frozen=True)
class Embedding(JsonSerializable):
    """
    An injective map from pattern vertices to host vertices witnessing an induced
    occurrence. `images[i]` is the host vertex playing pattern vertex `i`.
    """

    pattern: str
    labels: tuple[str, ...]
    images: tuple[Vertex, ...]

    def __getitem__(self, label: str) -> Vertex:
        try:
            return self.images[self.labels.index(label)]
        except ValueError:
            raise UnknownPatternLabel(self.pattern, label) from None

    def image(self, *labels: str) -> tuple[Vertex, ...]:
        return tuple(self[label] for label in labels)

    @property
    def vertex_set(self) -> VertexSet:
        return VertexSet.from_iterable(self.images)

    def as_mapping(self) -> dict[str, Vertex]:
        return dict(zip(self.labels, self.images))

    def relabeled(self, pattern: str, labels: Iterable[str]) -> "Embedding":
        """The same images under a different pattern name and role labels."""
        return Embedding(pattern, tuple(labels), self.images)

    def revalidate(self, host: Graph, pattern: "Pattern") -> bool:
        """Check injectivity and every required edge and non-edge in `host`."""
        if len(self.images) != pattern.n or len(set(self.images)) != pattern.n:
            return False
        if any(not (0 <= v < host.n) for v in self.images):
            return False
        for i in range(pattern.n):
            for j in range(i + 1, pattern.n):
                if pattern.is_optional(i, j):
                    continue
                wanted = pattern.graph.adjacent(i, j)
                if wanted != host.adjacent(self.images[i], self.images[j]):
                    return False
        return True

    # @implements JsonSerializable
    def to_json(self) -> dict:
        return {"pattern": self.pattern, "map": self.as_mapping()}
