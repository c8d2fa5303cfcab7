from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from chibound.ext.colorer import ColorerOptions, color
from chibound.ext.decompose import around_triangle, d1d2, triangles
from chibound.ext.oracle import clique_number, exact_chromatic
from chibound.ext.patterns import Embedding, is_class_member, patterns_found
from chibound.lib.graph import Graph, validate
from chibound.lib.types import Vertex

__all__ = (
    "CommandResult",
    "cmd_color",
    "cmd_chi",
    "cmd_omega",
    "cmd_check",
    "cmd_patterns",
    "cmd_decompose",
)


@dataclass
class CommandResult:
    """
    What a single-graph command found: `doc` for `--format json`, `lines` for
    plain output.
    """

    doc: dict[str, Any]
    lines: list[str] = field(default_factory=list)
    ok: bool = True


def _vertices(vs: Sequence[Vertex]) -> str:
    return " ".join(str(v) for v in vs) or "-"


def _embedding(emb: Embedding) -> str:
    return " ".join(f"{label}={v}" for label, v in emb.as_mapping().items())


def cmd_color(g: Graph, options: Optional[ColorerOptions] = None) -> CommandResult:
    coloring, trace = color(g, options)
    valid = validate(g, coloring)
    graph6 = g.to_graph6()
    lines = [
        f"{graph6}\tk={coloring.k}\tcase={trace.case_id.value}"
        + f"\tcoloring={_vertices(coloring.assignment)}"
    ]
    for a in trace.anomalies:
        lines.append(f"  anomaly {a.claim_id} in {a.case_id.value}: {a.witness.to_json()}")
    return CommandResult(
        doc={
            "graph6": graph6,
            "k": coloring.k,
            "valid": valid,
            "coloring": list(coloring.assignment),
            "trace": trace.to_json(),
        },
        lines=lines,
        ok=valid,
    )


def cmd_chi(g: Graph) -> CommandResult:
    result = exact_chromatic(g)
    coloring = result.certificate
    assignment = list(coloring.assignment) if coloring is not None else []
    graph6 = g.to_graph6()
    return CommandResult(
        doc={"graph6": graph6, "chi": result.value, "coloring": assignment},
        lines=[f"{graph6}\tchi={result.value}\tcoloring={_vertices(assignment)}"],
    )


def cmd_omega(g: Graph) -> CommandResult:
    result = clique_number(g)
    clique = result.certificate.to_list() if result.certificate is not None else []
    graph6 = g.to_graph6()
    return CommandResult(
        doc={"graph6": graph6, "omega": result.value, "clique": clique},
        lines=[f"{graph6}\tomega={result.value}\tclique={_vertices(clique)}"],
    )


def cmd_check(g: Graph) -> CommandResult:
    membership = is_class_member(g)
    graph6 = g.to_graph6()
    if membership:
        line = f"{graph6}\tmember"
    else:
        assert membership.witness is not None
        w = membership.witness
        line = f"{graph6}\tnon-member\t{w.pattern}: {_embedding(w)}"
    return CommandResult(doc={"graph6": graph6, **membership.to_json()}, lines=[line])


def cmd_patterns(g: Graph) -> CommandResult:
    found = patterns_found(g)
    graph6 = g.to_graph6()
    lines = [f"{graph6}\t{len(found)} patterns"]
    lines.extend(f"  {emb.pattern}: {_embedding(emb)}" for emb in found)
    return CommandResult(
        doc={"graph6": graph6, "patterns": [emb.to_json() for emb in found]},
        lines=lines,
    )


def cmd_decompose(
    g: Graph, triangle: Optional[Sequence[Vertex]] = None, closed: bool = False
) -> CommandResult:
    """
    The `D1`/`D2` partition, and the partition around `triangle` (or around the
    least triangle when none is given).
    """
    graph6 = g.to_graph6()
    partition = d1d2(g, closed)
    doc: dict[str, Any] = {"graph6": graph6, "partition": partition.to_json()}
    lines = [
        f"{graph6}\tD1={_vertices(partition.d1.to_list())}"
        + f"\tD2={_vertices(partition.d2.to_list())}"
    ]
    if triangle is None:
        triangle = next(triangles(g), None)
    if triangle is not None:
        d = around_triangle(g, triangle)
        doc["triangle"] = d.to_json()
        lines.append(f"  triangle {_vertices(d.triangle)}")
        for name in ("A0", "A1", "A2", "B1", "B2", "B3"):
            lines.append(f"  {name}={_vertices(doc['triangle'][name])}")
        for i, split in enumerate(d.a2_splits, start=1):
            lines.append(f"  split{i}={_vertices(split.to_list())}")
    return CommandResult(doc=doc, lines=lines)
