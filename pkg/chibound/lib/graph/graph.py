from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Self, Sequence

from chibound.lib.constants import MAX_VERTICES
from chibound.lib.graph.graph_exceptions import (
    InvalidGraph,
    InvalidVertexSet,
    OverlappingSets,
    VertexOutOfRange,
)
from chibound.lib.graph.vertex_set import VertexSet, iter_bits
from chibound.lib.json_serializable import JsonSerializable
from chibound.lib.types import Bits, Edge, Vertex

__all__ = ("Graph",)


@dataclass(frozen=True)
class Graph(JsonSerializable):
    """
    An immutable simple undirected graph on the vertices `0..n-1`.

    Adjacency is stored as one incidence row per vertex, packed into an integer.
    Every "mutation" builds a new value.

    Attributes
    ----------
    n
        The number of vertices, at most 64.
    rows
        `rows[v]` has bit `u` set iff `u` and `v` are adjacent.
    """

    n: int
    rows: tuple[Bits, ...]

    def __post_init__(self):
        if not (0 <= self.n <= MAX_VERTICES):
            raise InvalidGraph(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise InvalidGraph(f"expected {self.n} incidence rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise InvalidGraph(f"row {v} references vertices outside 0..{self.n - 1}")
            if row >> v & 1:
                raise InvalidGraph(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise InvalidGraph(f"edge {v}-{u} is not symmetric")

    # -- construction ---------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> Self:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Self:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Self:
        if not (0 <= n <= MAX_VERTICES):
            raise InvalidGraph(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            for w in (u, v):
                if not (0 <= w < n):
                    raise VertexOutOfRange(w, n)
            if u == v:
                raise InvalidGraph(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def path(cls, n: int) -> Self:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Self:
        if n < 3:
            raise InvalidGraph(f"a cycle needs at least 3 vertices (got {n})")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def from_graph6(cls, text: str) -> Self:
        from chibound.lib.graph.graph6 import decode_graph6

        return decode_graph6(text)  # type: ignore

    # -- validation helpers ---------------------------------------------------

    @property
    def full_bits(self) -> Bits:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> VertexSet:
        return VertexSet(self.full_bits)

    def check_vertex(self, v: Vertex):
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise VertexOutOfRange(v, self.n)

    def check_set(self, s: VertexSet | Iterable[Vertex]) -> VertexSet:
        """Coerce `s` into a `VertexSet` and make sure it belongs to this graph."""
        if not isinstance(s, VertexSet):
            members = list(s)
            if any(not isinstance(v, int) or not (0 <= v < self.n) for v in members):
                raise InvalidVertexSet(members, self.n)
            s = VertexSet.from_iterable(members)
        if s.bits & ~self.full_bits:
            raise InvalidVertexSet(s, self.n)
        return s

    # -- adjacency ------------------------------------------------------------

    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: Vertex) -> VertexSet:
        self.check_vertex(v)
        return VertexSet(self.rows[v])

    def non_neighbors(self, v: Vertex) -> VertexSet:
        """`V - ({v} ∪ N(v))`."""
        self.check_vertex(v)
        return VertexSet(self.full_bits & ~self.rows[v] & ~(1 << v))

    def joint_complement_set(self, v1: Vertex, v2: Vertex) -> VertexSet:
        """`M(v1, v2) = V - ({v1, v2} ∪ N(v1) ∪ N(v2))`."""
        self.check_vertex(v1)
        self.check_vertex(v2)
        taken = self.rows[v1] | self.rows[v2] | (1 << v1) | (1 << v2)
        return VertexSet(self.full_bits & ~taken)

    def common_neighbors(self, *vertices: Vertex) -> VertexSet:
        bits = self.full_bits
        for v in vertices:
            self.check_vertex(v)
            bits &= self.rows[v]
        return VertexSet(bits)

    def degree(self, v: Vertex) -> int:
        self.check_vertex(v)
        return self.rows[v].bit_count()

    def degree_within(self, v: Vertex, s: VertexSet) -> int:
        return (self.rows[v] & s.bits).bit_count()

    def edges(self) -> Iterator[Edge]:
        """Yield every edge `(u, v)` with `u < v`, ordered by `u` then `v`."""
        for u, row in enumerate(self.rows):
            yield from ((u, v) for v in iter_bits(row >> (u + 1) << (u + 1)))

    def edges_within(self, s: VertexSet) -> Iterator[Edge]:
        for u in s:
            higher = self.rows[u] & s.bits & ~((1 << (u + 1)) - 1)
            yield from ((u, v) for v in iter_bits(higher))

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edge_count_within(self, s: VertexSet) -> int:
        return sum((self.rows[v] & s.bits).bit_count() for v in s) // 2

    # -- set predicates -------------------------------------------------------

    def _disjoint_pair(self, s1: VertexSet, s2: VertexSet) -> tuple[VertexSet, VertexSet]:
        s1, s2 = self.check_set(s1), self.check_set(s2)
        if not s1.isdisjoint(s2):
            raise OverlappingSets(s1 & s2)
        return s1, s2

    def complete_to(self, s1: VertexSet, s2: VertexSet) -> bool:
        s1, s2 = self._disjoint_pair(s1, s2)
        return all(self.rows[u] & s2.bits == s2.bits for u in s1)

    def anticomplete_to(self, s1: VertexSet, s2: VertexSet) -> bool:
        s1, s2 = self._disjoint_pair(s1, s2)
        return all(self.rows[u] & s2.bits == 0 for u in s1)

    def first_non_edge_between(self, s1: VertexSet, s2: VertexSet) -> Optional[Edge]:
        for u in s1:
            if missing := s2.bits & ~self.rows[u] & ~(1 << u):
                return (u, (missing & -missing).bit_length() - 1)

    def first_edge_between(self, s1: VertexSet, s2: VertexSet) -> Optional[Edge]:
        for u in s1:
            if hit := s2.bits & self.rows[u]:
                return (u, (hit & -hit).bit_length() - 1)

    def first_edge_within(self, s: VertexSet) -> Optional[Edge]:
        return next(self.edges_within(s), None)

    def is_stable(self, s: VertexSet) -> bool:
        s = self.check_set(s)
        return all(self.rows[v] & s.bits == 0 for v in s)

    def is_clique(self, s: VertexSet) -> bool:
        s = self.check_set(s)
        return all((self.rows[v] | 1 << v) & s.bits == s.bits for v in s)

    # -- derived graphs -------------------------------------------------------

    def complement(self) -> "Graph":
        full = self.full_bits
        rows = (full & ~row & ~(1 << v) for v, row in enumerate(self.rows))
        return Graph(self.n, tuple(rows))

    def induced(self, s: VertexSet | Iterable[Vertex]) -> "Graph":
        """
        The subgraph induced by `s`, relabeled densely in ascending vertex order.
        """
        s = self.check_set(s)
        order = list(s)
        index = {v: i for i, v in enumerate(order)}
        rows = []
        for v in order:
            row = 0
            for u in iter_bits(self.rows[v] & s.bits):
                row |= 1 << index[u]
            rows.append(row)
        return Graph(len(order), tuple(rows))

    def relabel(self, perm: Sequence[Vertex]) -> "Graph":
        """Send vertex `v` to `perm[v]`; `perm` must be a permutation of `0..n-1`."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidGraph(f"{list(perm)} is not a permutation of 0..{self.n - 1}")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        edges = list(self.edges()) + [(u + shift, v + shift) for u, v in other.edges()]
        return Graph.from_edges(self.n + other.n, edges)

    def _with_rows(self, u: Vertex, v: Vertex, present: Optional[bool]) -> "Graph":
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            raise InvalidGraph(f"self-loop at vertex {u}")
        rows = list(self.rows)
        on = (not self.rows[u] >> v & 1) if present is None else present
        if on:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        else:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def with_edge(self, u: Vertex, v: Vertex) -> "Graph":
        return self._with_rows(u, v, True)

    def without_edge(self, u: Vertex, v: Vertex) -> "Graph":
        return self._with_rows(u, v, False)

    def flip_edge(self, u: Vertex, v: Vertex) -> "Graph":
        return self._with_rows(u, v, None)

    def with_vertex(self, neighbors: Iterable[Vertex] = ()) -> "Graph":
        """A copy with one extra vertex `n` joined to `neighbors`."""
        new = self.n
        return Graph.from_edges(
            self.n + 1, list(self.edges()) + [(v, new) for v in neighbors]
        )

    def components(self) -> list[VertexSet]:
        """Connected components, ordered by their least vertex."""
        remaining = self.full_bits
        found: list[VertexSet] = []
        while remaining:
            frontier = remaining & -remaining
            seen = frontier
            while frontier:
                grow = 0
                for v in iter_bits(frontier):
                    grow |= self.rows[v]
                frontier = grow & ~seen
                seen |= frontier
            found.append(VertexSet(seen))
            remaining &= ~seen
        return found

    # -- serialization --------------------------------------------------------

    def to_graph6(self) -> str:
        from chibound.lib.graph.graph6 import encode_graph6

        return encode_graph6(self)

    # @implements JsonSerializable
    def to_json(self) -> str:
        return self.to_graph6()

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"
