from logging import Logger, getLogger

from chibound.ext.colorer.assembly import (
    CaseOutcome,
    finish,
    require_anticomplete,
    require_at_most,
    require_edge_free,
)
from chibound.ext.colorer.colorer_exceptions import ClaimViolation
from chibound.ext.colorer.trace import CaseId, CaseTrace
from chibound.ext.decompose import InvalidConfiguration, around_triangle, triangles
from chibound.lib.constants import TRIANGLE_FREE_COLOR_BOUND
from chibound.lib.graph import Coloring, Graph, VertexSet, Witness, WitnessKind
from chibound.lib.types import Vertex

__all__ = (
    "d2_pair_outcome",
    "color_d2_pair",
)


log: Logger = getLogger(__name__)


def _oriented(g: Graph, v1: Vertex, v2: Vertex) -> tuple[Vertex, Vertex]:
    """Order the pair so that `N(v1) - N(v2)` is edge-free."""
    n1, n2 = g.neighbors(v1), g.neighbors(v2)
    if g.first_edge_within(n1 - n2) is None:
        return v1, v2
    if g.first_edge_within(n2 - n1) is None:
        return v2, v1
    ends = VertexSet.of(*g.first_edge_within(n1 - n2), *g.first_edge_within(n2 - n1))
    raise ClaimViolation(
        "d2-pair.one-side-edge-free", Witness.of(WitnessKind.EDGE_COUNT, ends, bound=0)
    )


def _small_omega_outcome(
    g: Graph, v1: Vertex, p: VertexSet, r: VertexSet, edge: tuple[Vertex, Vertex]
) -> CaseOutcome:
    a, b = edge
    d = around_triangle(g, (v1, a, b))
    outcome = CaseOutcome(CaseId.THM13_SMALL_OMEGA)
    outcome.add(r, 1, "d2-pair.common-neighbors-stable")
    outcome.add(p, 1, "d2-pair.one-side-edge-free")
    outcome.add(d.b2 | d.a0, 2, "d2-pair.b2-a0-two-colorable")
    outcome.add(d.b3, 2, "d2-pair.b3-two-colorable")
    outcome.add(d.split(3).add(v1), 1, "split3-stable-by-k4-free")
    return outcome


def _e_sets(
    g: Graph, n2: VertexSet, us: tuple[Vertex, Vertex, Vertex]
) -> tuple[list[VertexSet], list[VertexSet]]:
    """
    `E_i` holds the vertices of `N(v2)` whose only neighbor among the triangle
    is `u_i`; `E_{i,i+1}` those seeing exactly `u_i` and `u_{i+1}`.
    """
    singles: list[list[Vertex]] = [[], [], []]
    pairs: list[list[Vertex]] = [[], [], []]
    for x in n2:
        seen = [i for i, u in enumerate(us) if g.adjacent(x, u)]
        match seen:
            case [i]:
                singles[i].append(x)
            case [0, 1]:
                pairs[0].append(x)
            case [1, 2]:
                pairs[1].append(x)
            case [0, 2]:
                pairs[2].append(x)
            case _:
                raise ClaimViolation(
                    "d2-pair.n-v2-sees-one-or-two-of-triangle",
                    Witness.of(WitnessKind.NEIGHBORHOOD, (x, *us)),
                )
    return (
        [VertexSet.from_iterable(s) for s in singles],
        [VertexSet.from_iterable(s) for s in pairs],
    )


def _omega2_outcome(g: Graph, v1: Vertex, v2: Vertex, p: VertexSet) -> CaseOutcome:
    outcome = CaseOutcome(CaseId.THM13_OMEGA2)
    pair = VertexSet.of(v1, v2)

    a = g.joint_complement_set(v1, v2)
    if (edge := g.first_edge_within(a)) is not None:
        x1, x2 = edge
        n_x1, n_x2 = g.neighbors(x1), g.neighbors(x2)
        outcome.add((a - n_x1) | pair, 1, "d2-pair.a-outside-n-x1-stable")
        outcome.add((a & n_x1) - n_x2, 1, "d2-pair.a-in-n-x1-outside-n-x2-stable")
        outcome.add(a & n_x1 & n_x2, 1, "d2-pair.a-in-n-x1-n-x2-stable")
    else:
        outcome.add(a | pair, 1, "d2-pair.a-edge-free")

    n2 = g.neighbors(v2)
    t = next(triangles(g, within=g.vertices - n2), None)
    if t is None:
        log.debug(f"no triangle avoids N({v2}); coloring it as a triangle-free graph")
        outcome.add(
            n2,
            TRIANGLE_FREE_COLOR_BOUND,
            "d2-pair.n-v2-triangle-free-three-colorable",
        )
    else:
        singles, pairs = _e_sets(g, n2, t)
        for i in range(3):
            require_at_most(singles[i], 1, f"d2-pair.e{i + 1}-at-most-one")
            require_edge_free(g, pairs[i], f"d2-pair.e{i + 1}{(i + 1) % 3 + 1}-edge-free")
        for i in range(3):
            require_anticomplete(
                g,
                singles[i],
                pairs[i],
                f"d2-pair.e{i + 1}-anticomplete-to-e{i + 1}{(i + 1) % 3 + 1}",
            )
            outcome.add(
                singles[i] | pairs[i],
                1,
                f"d2-pair.e{i + 1}-with-e{i + 1}{(i + 1) % 3 + 1}-stable",
            )

    outcome.add(p, 1, "d2-pair.one-side-edge-free")
    return outcome


def d2_pair_outcome(g: Graph, v1: Vertex, v2: Vertex) -> CaseOutcome:
    """
    `v1` and `v2` are nonadjacent vertices of `D2`. After orienting the pair,
    `P = N(v1) - N(v2)` is one stable set and `R = N(v1) ∩ N(v2)` decides the
    construction: a stable `R` with an edge in `N(v1)` uses the triangle on that
    edge, anything else colors `M(v1, v2)` and `N(v2)` with three colors each.
    """
    g.check_vertex(v1)
    g.check_vertex(v2)
    if v1 == v2 or g.adjacent(v1, v2):
        raise InvalidConfiguration(f"{v1} and {v2} must be distinct and nonadjacent")
    v1, v2 = _oriented(g, v1, v2)
    n1, n2 = g.neighbors(v1), g.neighbors(v2)
    p, r = n1 - n2, n1 & n2
    if g.is_stable(r) and (edge := g.first_edge_within(n1)) is not None:
        return _small_omega_outcome(g, v1, p, r, edge)
    return _omega2_outcome(g, v1, v2, p)


def color_d2_pair(g: Graph, v1: Vertex, v2: Vertex) -> tuple[Coloring, CaseTrace]:
    return finish(g, d2_pair_outcome(g, v1, v2))
