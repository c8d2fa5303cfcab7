from itertools import combinations
from logging import Logger, getLogger
from typing import Iterator

from chibound.lib.constants import MAX_ENUMERATION_VERTICES
from chibound.lib.graph import Graph, UnsupportedSize, canonical_key

__all__ = (
    "labeled_count",
    "enumerate_graphs",
)


log: Logger = getLogger(__name__)


def labeled_count(n: int) -> int:
    return 2 ** (n * (n - 1) // 2)


def enumerate_graphs(n: int, dedup: bool = False) -> Iterator[Graph]:
    """
    Every labeled graph on `n` vertices, in the order of the edge masks over the
    pairs `(0, 1), (0, 2), ..., (n-2, n-1)`.

    With `dedup` only the first graph of each isomorphism class is yielded.
    """
    if not (0 <= n <= MAX_ENUMERATION_VERTICES):
        raise UnsupportedSize("enumerate_graphs", n, MAX_ENUMERATION_VERTICES)
    pairs = list(combinations(range(n), 2))
    seen: set[bytes] = set()
    for mask in range(labeled_count(n)):
        g = Graph.from_edges(n, (pair for i, pair in enumerate(pairs) if mask >> i & 1))
        if dedup:
            key = canonical_key(g)
            if key in seen:
                continue
            seen.add(key)
        yield g
    if dedup:
        log.debug(f"{len(seen)} isomorphism classes on {n} vertices")
