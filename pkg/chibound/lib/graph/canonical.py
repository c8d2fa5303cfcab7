from itertools import permutations, product
from typing import Iterator, Sequence

from chibound.lib.constants import MAX_CANONICAL_VERTICES
from chibound.lib.graph.graph import Graph
from chibound.lib.graph.graph_exceptions import UnsupportedSize
from chibound.lib.graph.vertex_set import iter_bits
from chibound.lib.types import Vertex

__all__ = (
    "canonical_key",
    "is_isomorphic",
)


def _cells(g: Graph) -> list[list[Vertex]]:
    """
    Group vertices by an isomorphism-invariant signature (degree, then the sorted
    degrees of the neighbors), with the groups themselves in signature order.
    """
    degrees = [row.bit_count() for row in g.rows]
    signature = {
        v: (degrees[v], tuple(sorted(degrees[u] for u in iter_bits(g.rows[v]))))
        for v in range(g.n)
    }
    cells: dict[tuple, list[Vertex]] = {}
    for v in range(g.n):
        cells.setdefault(signature[v], []).append(v)
    return [cells[key] for key in sorted(cells)]


def _orderings(cells: Sequence[Sequence[Vertex]]) -> Iterator[tuple[Vertex, ...]]:
    for parts in product(*(permutations(cell) for cell in cells)):
        yield tuple(v for part in parts for v in part)


def _triangle_code(g: Graph, order: Sequence[Vertex]) -> int:
    # Position `p` holds original vertex `order[p]`; bits follow graph6 pair order.
    code = 0
    rows = g.rows
    for j in range(1, len(order)):
        row = rows[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def canonical_key(g: Graph) -> bytes:
    """
    An exact isomorphism invariant: equal keys iff the graphs are isomorphic.

    The key is the lexicographically least upper-triangle bitstring over every
    relabeling that keeps the invariant vertex cells in their fixed order. Any
    isomorphism maps cells onto cells, so the candidate sets of isomorphic graphs
    coincide and the minimum is a true canonical form.
    """
    if g.n > MAX_CANONICAL_VERTICES:
        raise UnsupportedSize("canonical_key", g.n, MAX_CANONICAL_VERTICES)
    best = min((_triangle_code(g, order) for order in _orderings(_cells(g))), default=0)
    width = (g.n * (g.n - 1) // 2 + 7) // 8
    return bytes([g.n]) + best.to_bytes(width, "big")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    return canonical_key(g) == canonical_key(h)
