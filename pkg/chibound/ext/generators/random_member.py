from itertools import combinations
from logging import Logger, getLogger
from random import Random

from chibound.ext.generators.generators_exceptions import GenerationFailure
from chibound.ext.generators.generators_options import (
    DEFAULT_MAX_REPAIR_STEPS,
    GenConfig,
)
from chibound.ext.patterns import contains_induced, get_pattern, is_class_member
from chibound.lib.graph import Graph

__all__ = (
    "random_graph",
    "repair",
    "random_class_member",
    "mutate",
)


log: Logger = getLogger(__name__)


def random_graph(cfg: GenConfig, rng: Random) -> Graph:
    """An Erdős–Rényi draw, each pair present with exactly `cfg.edge_probability`."""
    p = cfg.edge_probability
    edges = [
        pair
        for pair in combinations(range(cfg.n), 2)
        if rng.randrange(p.denominator) < p.numerator
    ]
    return Graph.from_edges(cfg.n, edges)


def repair(g: Graph, rng: Random, max_steps: int = DEFAULT_MAX_REPAIR_STEPS) -> Graph:
    """
    Delete edges until `g` is (P3∪P2, K4)-free. A K4 loses one of its six edges;
    a P3∪P2 loses its P2 edge or one of the two P3 edges. Edge deletion only, so
    the loop ends at the empty graph at the latest.

    Raises `GenerationFailure` once `max_steps` deletions did not suffice.
    """
    k4 = get_pattern("k4")
    p3up2 = get_pattern("p3up2")
    start = g.to_graph6()
    for step in range(max_steps + 1):
        if emb := contains_induced(g, k4):
            choices = list(combinations(sorted(emb.images), 2))
        elif emb := contains_induced(g, p3up2):
            a1, a2, a3, b1, b2 = emb.image("a1", "a2", "a3", "b1", "b2")
            choices = [(a1, a2), (a2, a3), (b1, b2)]
        else:
            if step:
                log.debug(f"repaired {start} with {step} deletions")
            return g
        if step == max_steps:
            break
        u, v = rng.choice(choices)
        g = g.without_edge(u, v)
    raise GenerationFailure(start, max_steps)


def _certified(g: Graph) -> Graph:
    membership = is_class_member(g)
    assert membership, f"repair left {membership.witness} in {g.to_graph6()}"
    return g


def random_class_member(cfg: GenConfig) -> Graph:
    """A seeded random (P3∪P2, K4)-free graph; identical configs give identical graphs."""
    rng = Random(cfg.seed)
    return _certified(repair(random_graph(cfg, rng), rng, cfg.max_repair_steps))


def mutate(g: Graph, seed: int, max_steps: int = DEFAULT_MAX_REPAIR_STEPS) -> Graph:
    """Flip one uniformly chosen pair of `g`, then repair; deterministic per `(g, seed)`."""
    if g.n < 2:
        return g
    rng = Random(f"{g.to_graph6()}:{seed}")
    u, v = rng.choice(list(combinations(range(g.n), 2)))
    return _certified(repair(g.flip_edge(u, v), rng, max_steps))
