from logging import Logger, getLogger

from chibound.ext.colorer.color import color
from chibound.ext.colorer.colorer_options import ColorerOptions
from chibound.ext.colorer.trace import Anomaly
from chibound.ext.oracle import color_within
from chibound.ext.patterns import Embedding, get_pattern
from chibound.lib.graph import Graph, WitnessKind

__all__ = ("replay_anomaly",)


log: Logger = getLogger(__name__)


def replay_anomaly(anomaly: Anomaly, options: ColorerOptions | None = None) -> bool:
    """
    Whether the recorded violation still shows on the decoded graph.

    Witnesses that speak about the graph alone are re-checked directly. The
    rest are reproduced by coloring the graph again and looking for an anomaly
    on the same claim.
    """
    g = Graph.from_graph6(anomaly.graph6)
    witness = anomaly.witness
    match witness.kind:
        case WitnessKind.EMBEDDING:
            if witness.pattern is None:
                return False
            p = get_pattern(witness.pattern)
            emb = Embedding(p.name, p.labels, witness.vertices)
            return emb.revalidate(g, p)
        case WitnessKind.NOT_COLORABLE:
            if witness.bound is None or any(not (0 <= v < g.n) for v in witness.vertices):
                return False
            return color_within(g, witness.vertex_set, witness.bound) is None
    if witness.kind.replays_directly:
        return bool(witness.holds_in(g))

    _, trace = color(g, options)
    replayed = any(a.claim_id == anomaly.claim_id for a in trace.anomalies)
    outcome = "reproduces" if replayed else "misses"
    log.debug(f"{anomaly.graph6}: re-coloring {outcome} {anomaly.claim_id}")
    return replayed
