from typing import Sequence

from chibound.lib import ResponsiveException
from chibound.lib.types import Vertex


class DecomposeException(ResponsiveException):
    pass


class InvalidTriangle(DecomposeException):
    def __init__(self, triangle: Sequence[Vertex], reason: str):
        self.triangle: tuple[Vertex, ...] = tuple(triangle)
        self.reason: str = reason
        super().__init__(f"{list(self.triangle)} is not a triangle: {reason}")


class TriangleHasK4(DecomposeException):
    def __init__(self, triangle: Sequence[Vertex], vertex: Vertex):
        self.triangle: tuple[Vertex, ...] = tuple(triangle)
        self.vertex: Vertex = vertex
        super().__init__(
            f"Vertex {vertex} is complete to the triangle {list(self.triangle)}, "
            + "so the graph contains K4"
        )


class InvalidConfiguration(DecomposeException):
    def __init__(self, reason: str):
        self.reason: str = reason
        super().__init__(f"Invalid vertex configuration: {reason}")
