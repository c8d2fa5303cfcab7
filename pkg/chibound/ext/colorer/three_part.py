from chibound.ext.colorer.colorer_exceptions import ClaimViolation, HypothesisViolation
from chibound.ext.decompose import InvalidConfiguration, triangles
from chibound.lib.graph import (
    Coloring,
    Graph,
    OverlappingSets,
    VertexSet,
    Witness,
    WitnessKind,
)

__all__ = (
    "check_three_part_hypotheses",
    "three_part_classes",
    "three_part_color",
)


def _require_matching(g: Graph, s: VertexSet, condition: str):
    # (K3, P3)-free is the same as maximum degree at most one.
    for v in s:
        if g.degree_within(v, s) > 1:
            nbrs = (g.neighbors(v) & s).to_list()
            raise HypothesisViolation(
                condition, Witness.of(WitnessKind.HIGH_DEGREE, (v, *nbrs), bound=1)
            )


def _require_triangle_free(g: Graph, s: VertexSet, condition: str):
    if (t := next(triangles(g, within=s), None)) is not None:
        raise HypothesisViolation(condition, Witness.of(WitnessKind.TRIANGLE, t))


def _require_edge_free(g: Graph, s: VertexSet, condition: str, bound: int = 0):
    edges = list(g.edges_within(s))
    if len(edges) > bound:
        ends = VertexSet.from_iterable(v for e in edges[: bound + 1] for v in e)
        raise HypothesisViolation(
            condition, Witness.of(WitnessKind.EDGE_COUNT, ends, bound=bound)
        )


def check_three_part_hypotheses(
    g: Graph, v1: VertexSet, v2: VertexSet, v3: VertexSet, *, strict: bool = False
):
    """
    Check, inside `G[V1 ∪ V2 ∪ V3]`, everything the three-part 3-coloring asks of
    its input. Raises `HypothesisViolation` naming the first failed condition.
    """
    for a, b in ((v1, v2), (v1, v3), (v2, v3)):
        if not a.isdisjoint(b):
            raise OverlappingSets(a & b)
    u = v1 | v2 | v3

    _require_matching(g, v1, "v1-matching")
    _require_matching(g, v2, "v2-matching")
    _require_edge_free(g, v3, "v3-stable")
    _require_triangle_free(g, v1 | v2, "v1v2-triangle-free")
    _require_matching(g, v1 | v3, "v1v3-matching")
    _require_matching(g, v2 | v3, "v2v3-matching")
    for part in (v1, v2):
        for v in part:
            m = u - g.neighbors(v) - VertexSet.of(v)
            _require_edge_free(g, m - part, "m-minus-part-edge-free")
    _require_edge_free(g, v1, "v1-one-edge", bound=1)

    if not strict:
        return
    for v in v3:
        for here, there in ((v1, v2), (v2, v1)):
            n_here = g.neighbors(v) & here
            n_there = g.neighbors(v) & there
            if not n_here or not n_there:
                continue
            expected = VertexSet.from_iterable(
                x for x in here if not g.complete_to(VertexSet.of(x), n_there)
            )
            if n_here != expected:
                raise HypothesisViolation(
                    "v3-neighborhood",
                    Witness.of(WitnessKind.NEIGHBORHOOD, (v, *(n_here ^ expected))),
                )


def three_part_classes(
    g: Graph, v1: VertexSet, v2: VertexSet, v3: VertexSet, *, strict: bool = False
) -> list[VertexSet]:
    """
    Three stable sets covering `V1 ∪ V2 ∪ V3`, built from one vertex `v` of `V1`.

    With `V1` edge-free, `v` is its least vertex and the classes are
    `(N(v) ∩ V3) ∪ (V1 ∩ M(v))`, `N(v) ∩ V2` and `{v} ∪ (M(v) - V1)`. With one
    edge in `V1`, `v` is its lower endpoint and the classes are `N(v)`,
    `{v} ∪ (M(v) ∩ V1)` and `M(v) - V1`. Neighborhoods are taken inside the union.

    An empty `V1` swaps roles with `V2`.
    """
    if not v1:
        v1, v2 = v2, v1
    if not v1:
        check_three_part_hypotheses(g, v1, v2, v3, strict=strict)
        return [v3, VertexSet(), VertexSet()]
    check_three_part_hypotheses(g, v1, v2, v3, strict=strict)

    u = v1 | v2 | v3
    edge = g.first_edge_within(v1)
    v = edge[0] if edge else v1.min()
    n = g.neighbors(v) & u
    m = u - n - VertexSet.of(v)
    if edge is None:
        classes = [(n & v3) | (v1 & m), n & v2, (m - v1).add(v)]
    else:
        classes = [n, (m & v1).add(v), m - v1]

    for c in classes:
        if pair := g.first_edge_within(c):
            raise ClaimViolation(
                "three-part.class-stable", Witness.of(WitnessKind.ADJACENT_PAIR, pair)
            )
    return classes


def three_part_color(
    g: Graph, v1: VertexSet, v2: VertexSet, v3: VertexSet, *, strict: bool = False
) -> Coloring:
    """3-color `g` from a partition of `V(g)` into three parts meeting the hypotheses."""
    v1, v2, v3 = (g.check_set(s) for s in (v1, v2, v3))
    if (v1 | v2 | v3) != g.vertices:
        raise InvalidConfiguration("the three parts must cover every vertex")
    return Coloring.from_classes(g.n, three_part_classes(g, v1, v2, v3, strict=strict))
