from dataclasses import dataclass
from typing import Iterable, Iterator, Self

from chibound.lib.json_serializable import JsonSerializable
from chibound.lib.types import Bits, Vertex

__all__ = (
    "iter_bits",
    "bits_of",
    "VertexSet",
)


def iter_bits(bits: Bits) -> Iterator[Vertex]:
    """Yield the members of a packed vertex set in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def bits_of(vertices: Iterable[Vertex]) -> Bits:
    bits = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"Negative vertex: {v}")
        bits |= 1 << v
    return bits


@dataclass(frozen=True, slots=True)
class VertexSet(JsonSerializable):
    """
    An immutable set of vertices, packed into an integer.

    Iteration is always in ascending vertex order, which is what keeps every
    downstream trace deterministic.
    """

    bits: Bits = 0

    @classmethod
    def of(cls, *vertices: Vertex) -> Self:
        return cls(bits_of(vertices))

    @classmethod
    def from_iterable(cls, vertices: Iterable[Vertex]) -> Self:
        return cls(bits_of(vertices))

    @classmethod
    def range(cls, n: int) -> Self:
        return cls((1 << n) - 1)

    def __iter__(self) -> Iterator[Vertex]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.bits >> v & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & ~other.bits)

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits ^ other.bits)

    def __le__(self, other: "VertexSet") -> bool:
        return self.bits & ~other.bits == 0

    def __repr__(self) -> str:
        return "{" + ", ".join(str(v) for v in self) + "}"

    def add(self, *vertices: Vertex) -> "VertexSet":
        return VertexSet(self.bits | bits_of(vertices))

    def discard(self, *vertices: Vertex) -> "VertexSet":
        return VertexSet(self.bits & ~bits_of(vertices))

    def isdisjoint(self, other: "VertexSet") -> bool:
        return self.bits & other.bits == 0

    def issubset(self, other: "VertexSet") -> bool:
        return self <= other

    def min(self) -> Vertex:
        if not self.bits:
            raise ValueError("min() of an empty vertex set")
        return (self.bits & -self.bits).bit_length() - 1

    def max_vertex(self) -> Vertex:
        if not self.bits:
            raise ValueError("max_vertex() of an empty vertex set")
        return self.bits.bit_length() - 1

    def to_list(self) -> list[Vertex]:
        return list(self)

    # @implements JsonSerializable
    def to_json(self) -> list[Vertex]:
        return list(self)
