from dataclasses import dataclass, field
from enum import Enum
from json import JSONDecodeError
from logging import Logger, getLogger
from pathlib import Path
from typing import Any, Iterable, Iterator, Optional, Self

from chibound.core.exceptions import LedgerWriteFailed, MalformedLedgerLine
from chibound.lib import (
    FromDataMixin,
    JsonSerializable,
    MalformedData,
    jsonl_append,
    jsonl_iter,
)
from chibound.lib.constants import COLOR_BOUND, TOOL_VERSION
from chibound.lib.graph import Graph, Graph6ParseError, Witness
from chibound.lib.utils import dict_without_nones

__all__ = (
    "RecordKind",
    "LedgerRecord",
    "JsonLinesLedger",
)


class RecordKind(Enum):
    RUN = "run"
    ANOMALY = "anomaly"
    BOUND_CHECK = "bound-check"


@dataclass(frozen=True)
class LedgerRecord(JsonSerializable, FromDataMixin):
    """
    One line of the ledger.

    Attributes
    ----------
    kind
        `run` for a colored graph, `anomaly` for a failed claim met on the way,
        `bound-check` for a bounds verification.
    graph6
        The graph.
    case_id
        The case that colored it, or that the anomaly was met in.
    colors_used
        Colors in the produced coloring.
    oracle_chi, oracle_omega
        Exact χ and ω.
    seed
        The derived seed of a fuzzed item.
    duration_millis
        Wall time of the check.
    claim_id, witness
        For anomalies: the failed claim and where.
    bound
        For bound checks: the report.
    failures
        Hard failures found for this graph.
    """

    kind: RecordKind
    graph6: str
    case_id: Optional[str] = None
    colors_used: Optional[int] = None
    oracle_chi: Optional[int] = None
    oracle_omega: Optional[int] = None
    seed: Optional[int] = None
    duration_millis: Optional[int] = None
    claim_id: Optional[str] = None
    witness: Optional[Witness] = None
    bound: Optional[dict] = None
    failures: tuple[str, ...] = ()
    tool_version: str = TOOL_VERSION

    @property
    def hard_failure(self) -> bool:
        """
        Failures recorded, or a color count outside `[χ, 7]`: either the coloring
        or the oracle is wrong.
        """
        if self.failures:
            return True
        if self.colors_used is None:
            return False
        if self.colors_used > COLOR_BOUND:
            return True
        return self.oracle_chi is not None and self.colors_used < self.oracle_chi

    def graph(self) -> Graph:
        return Graph.from_graph6(self.graph6)

    def without_timing(self) -> Self:
        """The record minus what varies between identical runs."""
        return LedgerRecord(**{**self.__dict__, "duration_millis": None})

    # @overrides FromDataMixin
    @classmethod
    def try_from_data(cls, data: Any) -> Optional[Self]:
        if isinstance(data, dict):
            return cls(
                kind=RecordKind(data["kind"]),
                graph6=str(data["graph6"]),
                case_id=data.get("case"),
                colors_used=data.get("colors_used"),
                oracle_chi=data.get("oracle_chi"),
                oracle_omega=data.get("oracle_omega"),
                seed=data.get("seed"),
                duration_millis=data.get("duration_millis"),
                claim_id=data.get("claim"),
                witness=Witness.from_field_optional(data, "witness"),
                bound=data.get("bound"),
                failures=tuple(data.get("failures", ())),
                tool_version=str(data.get("tool_version", TOOL_VERSION)),
            )

    # @implements JsonSerializable
    def to_json(self) -> Any:
        return dict_without_nones(
            kind=self.kind.value,
            graph6=self.graph6,
            case=self.case_id,
            colors_used=self.colors_used,
            oracle_chi=self.oracle_chi,
            oracle_omega=self.oracle_omega,
            seed=self.seed,
            duration_millis=self.duration_millis,
            claim=self.claim_id,
            witness=self.witness.to_json() if self.witness else None,
            bound=self.bound,
            failures=list(self.failures) or None,
            tool_version=self.tool_version,
        )


@dataclass
class JsonLinesLedger:
    """
    Append-only JSONL ledger. The CLI process owns the only instance; workers
    hand their records back as values.

    Attributes
    ----------
    path
        The ledger file, created on first append.
    log
        A logger named in a uniquely identifiable way.
    written
        Lines appended by this instance.
    """

    path: Path

    log: Logger = field(init=False)
    written: int = field(init=False, default=0)

    def __post_init__(self):
        self.log = getLogger(f"{self.path.name} ({self.__class__.__name__}#{id(self)})")

    def append(self, records: Iterable[LedgerRecord]) -> int:
        records = list(records)
        if not records:
            return 0
        try:
            count = jsonl_append((r.to_json() for r in records), self.path)
        except OSError as ex:
            raise LedgerWriteFailed(self.path, str(ex)) from ex
        self.written += count
        self.log.debug(f"Appended {count} records ({self.written} so far)")
        return count

    def read(self) -> Iterator[LedgerRecord]:
        """Every record in file order. A missing file reads as empty."""
        if not self.path.exists():
            self.log.warning(f"Ledger file does not exist yet: {self.path}")
            return
        index = 0
        try:
            for data in jsonl_iter(self.path):
                index += 1
                record = LedgerRecord.from_data(data)
                record.graph()
                yield record
        except JSONDecodeError as ex:
            raise MalformedLedgerLine(self.path, index + 1, str(ex)) from ex
        except (MalformedData, Graph6ParseError) as ex:
            raise MalformedLedgerLine(self.path, index, str(ex)) from ex
