from dataclasses import dataclass

from chibound.ext.decompose.decompose_exceptions import InvalidConfiguration
from chibound.ext.oracle import clique_number
from chibound.lib.graph import Graph, VertexSet
from chibound.lib.json_serializable import JsonSerializable
from chibound.lib.types import Vertex

__all__ = (
    "D1D2Partition",
    "FiveSetSplit",
    "d1d2",
    "five_set_split",
)


@dataclass(frozen=True)
class D1D2Partition(JsonSerializable):
    """
    `d1` holds the vertices `x` with `ω(G - N(x)) ≤ 2`, `d2` the rest.

    With `closed` set the test uses `G - N[x]` instead, dropping `x` as well.
    """

    d1: VertexSet
    d2: VertexSet
    closed: bool = False

    # @implements JsonSerializable
    def to_json(self) -> dict:
        return {"D1": self.d1.to_json(), "D2": self.d2.to_json(), "closed": self.closed}


@dataclass(frozen=True)
class FiveSetSplit(JsonSerializable):
    """
    `(N(v1) ∪ N(v2)) - {v1, v2}` cut into five parts, `s5 = N(v1) ∩ N(v2)` first.
    """

    s1: VertexSet
    s2: VertexSet
    s3: VertexSet
    s4: VertexSet
    s5: VertexSet

    @property
    def parts(self) -> tuple[VertexSet, VertexSet, VertexSet, VertexSet, VertexSet]:
        return (self.s1, self.s2, self.s3, self.s4, self.s5)

    # @implements JsonSerializable
    def to_json(self) -> dict:
        return {f"S{i}": part.to_json() for i, part in enumerate(self.parts, start=1)}


def d1d2(g: Graph, closed: bool = False) -> D1D2Partition:
    d1 = VertexSet()
    for x in range(g.n):
        keep = g.non_neighbors(x) if closed else g.non_neighbors(x).add(x)
        if clique_number(g, within=keep).value <= 2:
            d1 = d1.add(x)
    return D1D2Partition(d1, g.vertices - d1, closed)


def five_set_split(
    g: Graph, v1: Vertex, v2: Vertex, v3: Vertex, *, closed: bool = False
) -> FiveSetSplit:
    """
    Split the joint neighborhood of the edge `v1v2` relative to `v3`.

    Requires `v1 ~ v2`, `v3` adjacent to neither, and all three in `D1` (built
    with `closed` as in `d1d2`); raises `InvalidConfiguration` otherwise.
    """
    for v in (v1, v2, v3):
        g.check_vertex(v)
    if len({v1, v2, v3}) != 3:
        raise InvalidConfiguration(f"vertices {v1}, {v2}, {v3} must be distinct")
    if not g.adjacent(v1, v2):
        raise InvalidConfiguration(f"{v1} and {v2} must be adjacent")
    if g.adjacent(v1, v3) or g.adjacent(v2, v3):
        raise InvalidConfiguration(f"{v3} must be adjacent to neither {v1} nor {v2}")
    d1 = d1d2(g, closed).d1
    if outside := [v for v in (v1, v2, v3) if v not in d1]:
        raise InvalidConfiguration(f"vertices {outside} are not in D1")

    pair = VertexSet.of(v1, v2)
    n1 = g.neighbors(v1) - pair
    n2 = g.neighbors(v2) - pair
    n3 = g.neighbors(v3)
    s5 = n1 & n2
    return FiveSetSplit(
        s1=n1 - n3 - s5,
        s2=(n1 & n3) - n2,
        s3=n2 - n3 - s5,
        s4=(n2 & n3) - n1,
        s5=s5,
    )
