from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from typing import Any, Optional, Self

from chibound.ext.patterns import Embedding
from chibound.lib.exceptions import MalformedData
from chibound.lib.from_data_mixin import FromDataMixin
from chibound.lib.graph import Graph, VertexSet, Witness
from chibound.lib.json_serializable import JsonSerializable

__all__ = (
    "CaseId",
    "TracedSet",
    "Anomaly",
    "CaseTrace",
)


class CaseId(Enum):
    OMEGA_AT_MOST_2 = "OMEGA_AT_MOST_2"
    K3P2_FALLBACK = "K3P2_FALLBACK"
    THM11 = "THM11"
    CODOMINO_C1C2 = "CODOMINO_C1C2"
    CODOMINO_SWAPPED = "CODOMINO_SWAPPED"
    CODOMINO1 = "CODOMINO1"
    CODOMINO2 = "CODOMINO2"
    CODOMINO3_D1D3_EDGE = "CODOMINO3_D1D3_EDGE"
    CODOMINO3_D1D3_EMPTY = "CODOMINO3_D1D3_EMPTY"
    CODOMINO_C3 = "CODOMINO_C3"
    CODOMINO_NO_C3 = "CODOMINO_NO_C3"
    X1 = "X1"
    X2 = "X2"
    COTWINC5_Y = "COTWINC5_Y"
    COTWINC5_YFREE = "COTWINC5_YFREE"
    CHI37 = "CHI37"
    COA = "COA"
    THM13_SMALL_OMEGA = "THM13_SMALL_OMEGA"
    THM13_OMEGA2 = "THM13_OMEGA2"
    RESIDUAL_EXACT = "RESIDUAL_EXACT"
    FALLBACK_EXACT = "FALLBACK_EXACT"

    @property
    def is_named(self) -> bool:
        """Whether a structural case resolved the graph, rather than plain search."""
        return self not in (CaseId.RESIDUAL_EXACT, CaseId.FALLBACK_EXACT)


@dataclass(frozen=True)
class TracedSet(JsonSerializable):
    """One color class as it was laid down, with the claim that makes it stable."""

    vertices: VertexSet
    claim: str

    # @implements JsonSerializable
    def to_json(self) -> dict:
        return {"vertices": self.vertices.to_json(), "claim": self.claim}


@dataclass(frozen=True)
class Anomaly(JsonSerializable, FromDataMixin):
    """
    A concrete graph on which a structural claim failed its runtime check.

    The timestamp is informational only and takes no part in equality.
    """

    graph6: str
    claim_id: str
    witness: Witness
    case_id: CaseId
    timestamp: datetime = field(
        default_factory=lambda: datetime.now(timezone.utc), compare=False
    )

    # @overrides FromDataMixin
    @classmethod
    def try_from_data(cls, data: Any) -> Optional[Self]:
        if isinstance(data, dict):
            try:
                case_id = CaseId(data["case"])
                graph6 = str(data["graph6"])
                claim_id = str(data["claim"])
            except (KeyError, ValueError):
                raise MalformedData(cls, data)
            stamp = data.get("timestamp")
            return cls(
                graph6=graph6,
                claim_id=claim_id,
                witness=Witness.from_field(data, "witness"),
                case_id=case_id,
                timestamp=(
                    datetime.fromisoformat(stamp)
                    if stamp
                    else datetime.now(timezone.utc)
                ),
            )

    def to_json(self, with_timestamp: bool = True) -> dict:
        data = {
            "graph6": self.graph6,
            "claim": self.claim_id,
            "witness": self.witness.to_json(),
            "case": self.case_id.value,
        }
        if with_timestamp:
            data["timestamp"] = self.timestamp.isoformat()
        return data


@dataclass
class CaseTrace(JsonSerializable):
    """
    Which case produced a coloring, and the sets it colored on the way.

    Attributes
    ----------
    case_id
        The case that produced the final coloring.
    attempted
        Cases that were entered but abandoned on a failed claim, in order.
    stable_sets
        The color classes in color order, each tagged with its justification.
    witnesses
        Pattern occurrences the case consumed.
    anomalies
        Claim failures met on the way.
    """

    case_id: CaseId
    attempted: list[CaseId] = field(default_factory=list)
    stable_sets: list[TracedSet] = field(default_factory=list)
    witnesses: list[Embedding] = field(default_factory=list)
    anomalies: list[Anomaly] = field(default_factory=list)

    def revalidate(self, g: Graph) -> bool:
        """The recorded sets are stable in `g` and partition its vertices."""
        seen = VertexSet()
        for traced in self.stable_sets:
            if not g.is_stable(traced.vertices) or not seen.isdisjoint(traced.vertices):
                return False
            seen |= traced.vertices
        return seen == g.vertices

    # @implements JsonSerializable
    def to_json(self) -> dict:
        return {
            "case": self.case_id.value,
            "attempted": [c.value for c in self.attempted],
            "stable_sets": [s.to_json() for s in self.stable_sets],
            "witnesses": [w.to_json() for w in self.witnesses],
            "anomalies": [a.to_json(with_timestamp=False) for a in self.anomalies],
        }
