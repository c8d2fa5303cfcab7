from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from chibound.ext.decompose.decompose_exceptions import InvalidTriangle, TriangleHasK4
from chibound.ext.patterns import Embedding, contains_induced, get_pattern
from chibound.lib.graph import Graph, VertexSet
from chibound.lib.json_serializable import JsonSerializable
from chibound.lib.types import Vertex

__all__ = (
    "TriangleDecomposition",
    "StructureCheck",
    "triangles",
    "around_triangle",
    "verify_bi_p3_free",
)


@dataclass(frozen=True)
class TriangleDecomposition(JsonSerializable):
    """
    The partition of `V(G)` around a fixed triangle `(v1, v2, v3)`.

    Attributes
    ----------
    a0, a1, a2
        Vertices with zero, exactly one, and exactly two neighbors in the triangle.
    a3
        Vertices complete to the triangle. Always empty for K4-free hosts.
    b1, b2, b3
        `A0 ∪ A1` split by the single triangle neighbor: `b1` holds `A0` and the
        vertices whose only triangle neighbor is `v1`, `b2`/`b3` those attached
        only to `v2`/`v3`.
    a2_splits
        `A2` split by pair: entry `i-1` is `N(v_i) ∩ N(v_{i-1}) ∩ A2`, indices mod 3.
    """

    triangle: tuple[Vertex, Vertex, Vertex]
    a0: VertexSet
    a1: VertexSet
    a2: VertexSet
    b1: VertexSet
    b2: VertexSet
    b3: VertexSet
    a2_splits: tuple[VertexSet, VertexSet, VertexSet]
    a3: VertexSet = field(default_factory=VertexSet)

    @property
    def v1(self) -> Vertex:
        return self.triangle[0]

    @property
    def v2(self) -> Vertex:
        return self.triangle[1]

    @property
    def v3(self) -> Vertex:
        return self.triangle[2]

    @property
    def triangle_set(self) -> VertexSet:
        return VertexSet.of(*self.triangle)

    def b(self, i: int) -> VertexSet:
        return (self.b1, self.b2, self.b3)[i - 1]

    def split(self, i: int) -> VertexSet:
        return self.a2_splits[i - 1]

    def split_group(self, i: int) -> VertexSet:
        """`a2Split_i ∪ {v_{i+1}}`: stable whenever the host is K4-free."""
        return self.a2_splits[i - 1].add(self.triangle[i % 3])

    def split_groups(self) -> list[VertexSet]:
        return [self.split_group(i) for i in (1, 2, 3)]

    @property
    def b1_minus_a0(self) -> VertexSet:
        return self.b1 - self.a0

    # @implements JsonSerializable
    def to_json(self) -> dict:
        return {
            "triangle": list(self.triangle),
            "A0": self.a0.to_json(),
            "A1": self.a1.to_json(),
            "A2": self.a2.to_json(),
            "A3": self.a3.to_json(),
            "B1": self.b1.to_json(),
            "B2": self.b2.to_json(),
            "B3": self.b3.to_json(),
            "splits": [s.to_json() for s in self.a2_splits],
        }


@dataclass(frozen=True)
class StructureCheck(JsonSerializable):
    """Pass, or the first place where an expected structure is missing."""

    passed: bool
    where: Optional[str] = None
    witness: Optional[Embedding] = None

    def __bool__(self) -> bool:
        return self.passed

    # @implements JsonSerializable
    def to_json(self) -> dict:
        data: dict = {"passed": self.passed}
        if self.where is not None:
            data["where"] = self.where
        if self.witness is not None:
            data["witness"] = self.witness.to_json()
        return data


def triangles(
    g: Graph, within: Optional[VertexSet] = None
) -> Iterator[tuple[Vertex, Vertex, Vertex]]:
    """Every triangle `(a, b, c)` with `a < b < c`, in lexicographic order."""
    allowed = g.full_bits if within is None else g.check_set(within).bits
    rows = g.rows
    for a in VertexSet(allowed):
        for b in VertexSet(rows[a] & allowed & ~((2 << a) - 1)):
            for c in VertexSet(rows[a] & rows[b] & allowed & ~((2 << b) - 1)):
                yield (a, b, c)


def around_triangle(
    g: Graph,
    t: Sequence[Vertex],
    *,
    assert_k4_free: bool = True,
) -> TriangleDecomposition:
    """
    Decompose `g` around the ordered triangle `t`.

    Raises `InvalidTriangle` unless `t` is three distinct pairwise adjacent
    vertices, and `TriangleHasK4` when `assert_k4_free` is set and some vertex is
    complete to `t`.
    """
    if len(t) != 3:
        raise InvalidTriangle(t, f"expected 3 vertices, got {len(t)}")
    for v in t:
        g.check_vertex(v)
    v1, v2, v3 = t
    if len({v1, v2, v3}) != 3:
        raise InvalidTriangle(t, "vertices repeat")
    for a, b in ((v1, v2), (v2, v3), (v1, v3)):
        if not g.adjacent(a, b):
            raise InvalidTriangle(t, f"{a} and {b} are not adjacent")

    tri = VertexSet.of(v1, v2, v3)
    n1, n2, n3 = (g.neighbors(v) - tri for v in (v1, v2, v3))
    rest = g.vertices - tri
    a0 = rest - n1 - n2 - n3
    only1 = n1 - n2 - n3
    only2 = n2 - n1 - n3
    only3 = n3 - n1 - n2
    a3 = n1 & n2 & n3
    if a3 and assert_k4_free:
        raise TriangleHasK4(t, a3.min())
    a2 = (n1 & n2) | (n2 & n3) | (n1 & n3)
    a2 -= a3

    # Split i is N(v_i) ∩ N(v_{i-1}); earlier splits win on overlap.
    splits: list[VertexSet] = []
    taken = VertexSet()
    for here, before in ((n1, n3), (n2, n1), (n3, n2)):
        part = (here & before & a2) - taken
        splits.append(part)
        taken |= part

    return TriangleDecomposition(
        triangle=(v1, v2, v3),
        a0=a0,
        a1=only1 | only2 | only3,
        a2=a2,
        b1=a0 | only1,
        b2=only2,
        b3=only3,
        a2_splits=(splits[0], splits[1], splits[2]),
        a3=a3,
    )


def verify_bi_p3_free(g: Graph, d: TriangleDecomposition) -> StructureCheck:
    """Each `G[B_i]` should be P3-free; report the first induced P3 otherwise."""
    p3 = get_pattern("p3")
    for i in (1, 2, 3):
        if (emb := contains_induced(g, p3, within=d.b(i))) is not None:
            return StructureCheck(False, f"B{i}", emb)
    return StructureCheck(True)
