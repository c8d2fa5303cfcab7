from dataclasses import dataclass
from itertools import combinations, permutations
from logging import Logger, getLogger
from typing import Optional

from chibound.ext.oracle.oracle_exceptions import InvalidColorBudget
from chibound.ext.patterns import Pattern
from chibound.lib.constants import MAX_BRUTE_HOST_VERTICES, MAX_BRUTE_PATTERN_VERTICES
from chibound.lib.graph import (
    Coloring,
    Graph,
    UnsupportedSize,
    VertexSet,
    iter_bits,
    validate,
)
from chibound.lib.json_serializable import JsonSerializable
from chibound.lib.types import Bits, Vertex

__all__ = (
    "OracleResult",
    "clique_number",
    "independence_number",
    "degeneracy_order",
    "greedy_coloring",
    "k_colorable",
    "color_within",
    "exact_chromatic",
    "brute_contains",
)


log: Logger = getLogger(__name__)


@dataclass(frozen=True)
class OracleResult(JsonSerializable):
    """
    An exact value with the object that proves it: a clique for ω, a coloring for χ.
    """

    value: int
    certificate: Optional[VertexSet | Coloring] = None

    def revalidate(self, g: Graph) -> bool:
        match self.certificate:
            case None:
                return True
            case VertexSet() as clique:
                return len(clique) == self.value and g.is_clique(clique)
            case Coloring() as coloring:
                return (
                    coloring.n == g.n
                    and coloring.k == self.value
                    and validate(g, coloring)
                )
        return False

    # @implements JsonSerializable
    def to_json(self) -> dict:
        certificate = self.certificate.to_json() if self.certificate is not None else None
        return {"value": self.value, "certificate": certificate}


def _allowed(g: Graph, within: Optional[VertexSet]) -> Bits:
    return g.full_bits if within is None else g.check_set(within).bits


# @@ CLIQUES


def clique_number(g: Graph, within: Optional[VertexSet] = None) -> OracleResult:
    """
    Exact ω of `g` (or of `g[within]`) with a maximum clique as certificate.

    Bron-Kerbosch with Tomita pivoting on bitsets; a branch is cut as soon as it
    cannot beat the best clique found so far.
    """
    rows = g.rows
    best_bits = 0
    best_size = 0

    def expand(r: Bits, size: int, p: Bits, x: Bits):
        nonlocal best_bits, best_size
        if size > best_size:
            best_bits, best_size = r, size
        if not p or size + p.bit_count() <= best_size:
            return
        pivot = max(iter_bits(p | x), key=lambda u: (p & rows[u]).bit_count())
        candidates = p & ~rows[pivot]
        while candidates:
            low = candidates & -candidates
            candidates ^= low
            v = low.bit_length() - 1
            expand(r | low, size + 1, p & rows[v], x & rows[v])
            p &= ~low
            x |= low

    expand(0, 0, _allowed(g, within), 0)
    return OracleResult(best_size, VertexSet(best_bits))


def independence_number(g: Graph) -> OracleResult:
    return clique_number(g.complement())


# @@ COLORING


def degeneracy_order(g: Graph, within: Optional[VertexSet] = None) -> list[Vertex]:
    """
    Vertices in smallest-last removal order (ties broken by lowest index).
    """
    remaining = _allowed(g, within)
    rows = g.rows
    order: list[Vertex] = []
    while remaining:
        v = min(iter_bits(remaining), key=lambda u: ((rows[u] & remaining).bit_count(), u))
        order.append(v)
        remaining &= ~(1 << v)
    return order


def _search(g: Graph, allowed: Bits, k: int) -> Optional[dict[Vertex, int]]:
    order = list(reversed(degeneracy_order(g, VertexSet(allowed))))
    if not order:
        return {}
    rows = g.rows
    classes = [0] * k
    colors: dict[Vertex, int] = {}

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        # New colors are opened one at a time, so the first vertex is always color 1.
        for c in range(min(k, used + 1)):
            if classes[c] & rows[v]:
                continue
            classes[c] |= 1 << v
            colors[v] = c + 1
            if place(i + 1, max(used, c + 1)):
                return True
            classes[c] &= ~(1 << v)
        colors.pop(v, None)
        return False

    return colors if place(0, 0) else None


def k_colorable(g: Graph, k: int) -> Optional[Coloring]:
    """A proper coloring of `g` with at most `k` colors, if one exists."""
    if k < 1:
        raise InvalidColorBudget(k)
    colors = _search(g, g.full_bits, k)
    if colors is None:
        return None
    return Coloring.from_mapping(g.n, colors)


def color_within(g: Graph, s: VertexSet, k: int) -> Optional[list[VertexSet]]:
    """
    Split `s` into at most `k` stable sets of `g`, ordered by color, or `None`
    if `g[s]` needs more than `k` colors.
    """
    s = g.check_set(s)
    if not s:
        return []
    if k < 1:
        return None
    colors = _search(g, s.bits, k)
    if colors is None:
        return None
    classes = [0] * k
    for v, c in colors.items():
        classes[c - 1] |= 1 << v
    return [VertexSet(bits) for bits in classes if bits]


def greedy_coloring(g: Graph) -> Coloring:
    """First-fit coloring in reverse degeneracy order."""
    colors: dict[Vertex, int] = {}
    for v in reversed(degeneracy_order(g)):
        taken = {colors[u] for u in iter_bits(g.rows[v]) if u in colors}
        colors[v] = next(c for c in range(1, len(taken) + 2) if c not in taken)
    return Coloring.from_mapping(g.n, colors)


def exact_chromatic(g: Graph) -> OracleResult:
    """
    Exact χ with an optimal coloring as certificate.

    The scan runs upward from ω; the greedy coloring closes the range from above.
    """
    if g.n == 0:
        return OracleResult(0, Coloring(()))
    lower = max(clique_number(g).value, 1)
    upper = greedy_coloring(g)
    for k in range(lower, upper.k):
        if (coloring := k_colorable(g, k)) is not None:
            log.debug(f"χ = {k} for {g.to_graph6()} (greedy gave {upper.k})")
            return OracleResult(coloring.k, coloring)
    return OracleResult(upper.k, upper)


# @@ REFERENCE DETECTION


def brute_contains(host: Graph, p: Pattern) -> bool:
    """
    Reference induced-subgraph test: every vertex subset of the right size under
    every bijection. Optional pairs are unconstrained.
    """
    if p.n > MAX_BRUTE_PATTERN_VERTICES:
        raise UnsupportedSize("brute_contains pattern", p.n, MAX_BRUTE_PATTERN_VERTICES)
    if host.n > MAX_BRUTE_HOST_VERTICES:
        raise UnsupportedSize("brute_contains host", host.n, MAX_BRUTE_HOST_VERTICES)
    pairs = [
        (i, j, p.graph.adjacent(i, j))
        for i in range(p.n)
        for j in range(i + 1, p.n)
        if not p.is_optional(i, j)
    ]
    for subset in combinations(range(host.n), p.n):
        for images in permutations(subset):
            if all(host.adjacent(images[i], images[j]) == edge for i, j, edge in pairs):
                return True
    return False
