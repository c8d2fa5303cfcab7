from typing import Any, Iterable

from chibound.lib.exceptions import ResponsiveException

__all__ = (
    "GraphException",
    "InvalidGraph",
    "VertexOutOfRange",
    "InvalidVertexSet",
    "OverlappingSets",
    "UnsupportedSize",
    "Graph6ParseError",
    "InvalidColoring",
)


class GraphException(ResponsiveException):
    pass


class InvalidGraph(GraphException):
    def __init__(self, reason: str):
        self.reason: str = reason
        super().__init__(f"Invalid graph: {reason}")


class VertexOutOfRange(GraphException):
    def __init__(self, vertex: Any, n: int):
        self.vertex: Any = vertex
        self.n: int = n
        super().__init__(f"Vertex `{vertex}` is out of range for a graph on {n} vertices")


class InvalidVertexSet(GraphException):
    def __init__(self, members: Iterable[int], n: int):
        self.members: tuple[int, ...] = tuple(members)
        self.n: int = n
        super().__init__(
            f"Vertex set {list(self.members)} is not a subset of the {n} vertices of the graph"
        )


class OverlappingSets(GraphException):
    def __init__(self, shared: Iterable[int]):
        self.shared: tuple[int, ...] = tuple(shared)
        super().__init__(f"Vertex sets must be disjoint but share {list(self.shared)}")


class UnsupportedSize(GraphException):
    def __init__(self, what: str, size: int, limit: int):
        self.what: str = what
        self.size: int = size
        self.limit: int = limit
        super().__init__(f"{what} supports at most {limit} vertices (got {size})")


class Graph6ParseError(GraphException):
    def __init__(self, text: str, offset: int, reason: str):
        self.text: str = text
        self.offset: int = offset
        self.reason: str = reason
        super().__init__(f"Malformed graph6 at byte {offset}: {reason}")


class InvalidColoring(GraphException):
    def __init__(self, reason: str):
        self.reason: str = reason
        super().__init__(f"Invalid coloring: {reason}")
