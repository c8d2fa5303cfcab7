from typing import Iterator, Mapping, Optional

from chibound.ext.patterns.pattern import Embedding, Pattern
from chibound.lib.graph import Graph, VertexSet
from chibound.lib.types import Bits, Vertex

__all__ = (
    "placement_order",
    "find_induced",
    "contains_induced",
)


def _pinned_indices(
    p: Pattern, pinned: Optional[Mapping[str, Vertex]]
) -> dict[int, Vertex]:
    if not pinned:
        return {}
    return {p.index(label): host_vertex for label, host_vertex in pinned.items()}


def placement_order(
    p: Pattern, fixed: Optional[Mapping[int, Vertex]] = None
) -> list[int]:
    """
    The order pattern vertices are placed in: pinned vertices first, then by
    descending degree in the pattern, ties broken by index.
    """
    fixed = fixed or {}
    degree = [row.bit_count() for row in p.graph.rows]
    return sorted(range(p.n), key=lambda i: (i not in fixed, -degree[i], i))


def _images(
    host: Graph, p: Pattern, allowed: Bits, fixed: Mapping[int, Vertex]
) -> Iterator[tuple[Vertex, ...]]:
    """
    Every induced occurrence of `p` as an image tuple indexed by pattern vertex,
    in backtracking order.
    """
    k = p.n
    rows = host.rows
    p_rows = p.graph.rows
    opt_rows = p.optional_rows
    host_degree = [(rows[v] & allowed).bit_count() for v in range(host.n)]

    # Degree-feasible candidates per pattern vertex, computed once.
    base: list[Bits] = []
    for i in range(k):
        need = p_rows[i].bit_count()
        bits = 0
        for v in range(host.n):
            if allowed >> v & 1 and host_degree[v] >= need:
                bits |= 1 << v
        if i in fixed:
            bits &= 1 << fixed[i]
        if not bits:
            return
        base.append(bits)

    order = placement_order(p, fixed)
    images: list[Vertex] = [0] * k

    def extend(t: int, used: Bits) -> Iterator[tuple[Vertex, ...]]:
        if t == k:
            yield tuple(images)
            return
        i = order[t]
        candidates = base[i] & ~used
        for j in order[:t]:
            if not candidates:
                return
            if p_rows[i] >> j & 1:
                candidates &= rows[images[j]]
            elif not opt_rows[i] >> j & 1:
                candidates &= ~rows[images[j]]
        while candidates:
            low = candidates & -candidates
            candidates ^= low
            images[i] = low.bit_length() - 1
            yield from extend(t + 1, used | low)

    yield from extend(0, 0)


def _prepare(
    host: Graph,
    p: Pattern,
    within: Optional[VertexSet],
    pinned: Optional[Mapping[str, Vertex]],
) -> tuple[Bits, dict[int, Vertex]]:
    allowed: Bits = host.full_bits if within is None else host.check_set(within).bits
    fixed = _pinned_indices(p, pinned)
    for v in fixed.values():
        host.check_vertex(v)
    return allowed, fixed


def find_induced(
    host: Graph,
    p: Pattern,
    *,
    within: Optional[VertexSet] = None,
    pinned: Optional[Mapping[str, Vertex]] = None,
) -> Iterator[Embedding]:
    """
    Yield every induced occurrence of `p` in `host`, lexicographically ordered by
    the image sequence (image of pattern vertex 0 first, then 1, and so on).

    The search backtracks over pattern vertices in `placement_order`. Host
    candidates for each one are pruned by degree and by adjacency consistency
    with the vertices already placed; optional pairs impose no constraint. All
    occurrences are collected before the first one is yielded.

    Parameters
    ----------
    within
        Restrict images to this host vertex set (matching in the induced subgraph).
    pinned
        Fix the images of some pattern vertices, by label.
    """
    if p.n > host.n:
        return
    allowed, fixed = _prepare(host, p, within, pinned)
    for images in sorted(_images(host, p, allowed, fixed)):
        yield Embedding(p.name, p.labels, images)


def contains_induced(
    host: Graph,
    p: Pattern,
    *,
    within: Optional[VertexSet] = None,
    pinned: Optional[Mapping[str, Vertex]] = None,
) -> Optional[Embedding]:
    """
    The lexicographically least induced occurrence of `p`, or `None`.

    Any occurrence settles existence; the least one is then reached by lowering
    one coordinate at a time, each step a pinned search.
    """
    if p.n > host.n:
        return None
    allowed, fixed = _prepare(host, p, within, pinned)
    best = next(_images(host, p, allowed, fixed), None)
    if best is None:
        return None
    prefix = dict(fixed)
    for i in range(p.n):
        if i not in prefix:
            for h in range(best[i]):
                lower = next(_images(host, p, allowed, {**prefix, i: h}), None)
                if lower is not None:
                    best = lower
                    break
            prefix[i] = best[i]
    return Embedding(p.name, p.labels, best)
