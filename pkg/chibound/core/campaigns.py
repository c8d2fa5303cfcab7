import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from logging import Logger, getLogger
from time import perf_counter
from typing import Callable, Iterable, Iterator, Optional, TypeVar

from tqdm import tqdm

from chibound.core.ledger import JsonLinesLedger, LedgerRecord, RecordKind
from chibound.ext.bounds import (
    BoundReport,
    clique_cover,
    complement_bridge_holds,
    random_bounds_member,
    verify_chi_bound,
    verify_order_bound,
)
from chibound.ext.colorer import (
    CLAIM_K3P2,
    Anomaly,
    CaseId,
    ColorerOptions,
    color,
    replay_anomaly,
)
from chibound.ext.decompose import CLAIM_CHECKS, ClaimReport
from chibound.ext.generators import (
    GenConfig,
    GenerationFailure,
    enumerate_graphs,
    labeled_count,
    mutate,
    random_class_member,
)
from chibound.ext.oracle import clique_number, exact_chromatic
from chibound.ext.patterns import (
    contains_induced,
    get_pattern,
    is_bounds_class_member,
    is_class_member,
)
from chibound.lib import JsonSerializable
from chibound.lib.constants import COLOR_BOUND, K3P2_COLOR_BOUND
from chibound.lib.graph import Graph, Witness, WitnessKind, validate
from chibound.lib.utils import derive_seed

__all__ = (
    "FAILURE_INVALID_COLORING",
    "FAILURE_TRACE",
    "FAILURE_BELOW_CHI",
    "FAILURE_ABOVE_BOUND",
    "CheckResult",
    "CampaignSummary",
    "check_graph",
    "exhaustive_corpus",
    "fuzz_member",
    "run_verify",
    "run_fuzz",
    "run_coverage",
    "run_claims",
    "run_bounds",
    "run_replay",
)


log: Logger = getLogger(__name__)


FAILURE_INVALID_COLORING = "invalid-coloring"
FAILURE_TRACE = "trace-not-revalidated"
FAILURE_BELOW_CHI = "colors-below-oracle-chi"
FAILURE_ABOVE_BOUND = "colors-above-bound"

T = TypeVar("T")
R = TypeVar("R")


# @@ PER-GRAPH PIPELINE


@dataclass(frozen=True)
class CheckResult(JsonSerializable):
    """Everything `check_graph` learned about one graph."""

    graph6: str
    case_id: CaseId
    colors_used: int
    oracle_chi: int
    oracle_omega: int
    anomalies: tuple[Anomaly, ...] = ()
    failures: tuple[str, ...] = ()
    seed: Optional[int] = None
    duration_millis: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def records(self) -> list[LedgerRecord]:
        """One `run` record, then one `anomaly` record per anomaly."""
        run = LedgerRecord(
            kind=RecordKind.RUN,
            graph6=self.graph6,
            case_id=self.case_id.value,
            colors_used=self.colors_used,
            oracle_chi=self.oracle_chi,
            oracle_omega=self.oracle_omega,
            seed=self.seed,
            duration_millis=self.duration_millis,
            failures=self.failures,
        )
        return [run] + [
            LedgerRecord(
                kind=RecordKind.ANOMALY,
                graph6=a.graph6,
                case_id=a.case_id.value,
                seed=self.seed,
                claim_id=a.claim_id,
                witness=a.witness,
            )
            for a in self.anomalies
        ]

    # @implements JsonSerializable
    def to_json(self) -> dict:
        return {
            "graph6": self.graph6,
            "case": self.case_id.value,
            "colors_used": self.colors_used,
            "oracle_chi": self.oracle_chi,
            "oracle_omega": self.oracle_omega,
            "anomalies": [a.to_json(with_timestamp=False) for a in self.anomalies],
            "failures": list(self.failures),
        }


def check_graph(
    g: Graph, options: Optional[ColorerOptions] = None, seed: Optional[int] = None
) -> CheckResult:
    """
    Color a member, validate the coloring and its trace, and hold the color
    count between the exact χ and 7. Graphs containing K3∪P2 must also have
    χ ≤ 6.
    """
    started = perf_counter()
    coloring, trace = color(g, options)
    failures: list[str] = []
    if not validate(g, coloring):
        failures.append(FAILURE_INVALID_COLORING)
    if not trace.revalidate(g):
        failures.append(FAILURE_TRACE)
    chi = exact_chromatic(g).value
    omega = clique_number(g).value
    if coloring.k < chi:
        failures.append(FAILURE_BELOW_CHI)
    if coloring.k > COLOR_BOUND:
        failures.append(FAILURE_ABOVE_BOUND)

    anomalies = list(trace.anomalies)
    if (
        chi > K3P2_COLOR_BOUND
        and not any(a.claim_id == CLAIM_K3P2 for a in anomalies)
        and contains_induced(g, get_pattern("k3up2")) is not None
    ):
        anomalies.append(
            Anomaly(
                graph6=g.to_graph6(),
                claim_id=CLAIM_K3P2,
                witness=Witness.of(
                    WitnessKind.NOT_COLORABLE, g.vertices, bound=K3P2_COLOR_BOUND
                ),
                case_id=trace.case_id,
            )
        )

    result = CheckResult(
        graph6=g.to_graph6(),
        case_id=trace.case_id,
        colors_used=coloring.k,
        oracle_chi=chi,
        oracle_omega=omega,
        anomalies=tuple(anomalies),
        failures=tuple(failures),
        seed=seed,
        duration_millis=round((perf_counter() - started) * 1000),
    )
    if failures:
        log.error(f"{result.graph6}: {', '.join(failures)} ({trace.case_id.value})")
    return result


# @@ CAMPAIGN PLUMBING


@dataclass
class CampaignSummary(JsonSerializable):
    """Totals of one campaign, with a histogram of the cases that fired."""

    campaign: str
    checked: int = 0
    skipped: int = 0
    anomalies: int = 0
    failures: list[str] = field(default_factory=list)
    cases: Counter[str] = field(default_factory=Counter)

    def add(self, result: CheckResult):
        self.checked += 1
        self.anomalies += len(result.anomalies)
        self.cases[result.case_id.value] += 1
        if not result.passed:
            self.failures.append(result.graph6)

    @property
    def named_fraction(self) -> float:
        """The share of checked graphs resolved by a structural case."""
        if not self.checked:
            return 0.0
        named = sum(n for case, n in self.cases.items() if CaseId(case).is_named)
        return named / self.checked

    def exit_code(self, fail_on_anomaly: bool = False) -> int:
        if self.failures:
            return 1
        if fail_on_anomaly and self.anomalies:
            return 3
        return 0

    # @implements JsonSerializable
    def to_json(self) -> dict:
        return {
            "campaign": self.campaign,
            "checked": self.checked,
            "skipped": self.skipped,
            "anomalies": self.anomalies,
            "failures": list(self.failures),
            "cases": dict(sorted(self.cases.items())),
            "named_fraction": round(self.named_fraction, 6),
        }


def _progress(
    items: Iterable[R], total: Optional[int], desc: str, quiet: bool
) -> Iterable[R]:
    return tqdm(
        items,
        total=total,
        desc=desc,
        unit="graph",
        disable=quiet or not sys.stderr.isatty(),
    )


def _parallel_map(
    fn: Callable[[T], R], items: Iterable[T], workers: int, chunksize: int = 64
) -> Iterator[R]:
    """Ordered map, across processes when `workers` is above one."""
    if workers <= 1:
        yield from map(fn, items)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, items, chunksize=chunksize)


def exhaustive_corpus(n: int, dedup: bool = False) -> Iterator[str]:
    """graph6 of every labeled graph on `n` vertices, or one per isomorphism class."""
    for g in enumerate_graphs(n, dedup):
        yield g.to_graph6()


def _record(ledger: Optional[JsonLinesLedger], records: Iterable[LedgerRecord]):
    if ledger is not None:
        ledger.append(records)


# @@ VERIFY


def _verify_job(job: tuple[str, ColorerOptions]) -> Optional[CheckResult]:
    graph6, options = job
    g = Graph.from_graph6(graph6)
    if not is_class_member(g):
        return None
    return check_graph(g, options)


def run_verify(
    corpus: Iterable[str],
    *,
    options: Optional[ColorerOptions] = None,
    workers: int = 1,
    ledger: Optional[JsonLinesLedger] = None,
    total: Optional[int] = None,
    quiet: bool = False,
) -> CampaignSummary:
    """
    Check every class member of `corpus`; graphs outside the class are counted
    as skipped.
    """
    options = options or ColorerOptions()
    summary = CampaignSummary("verify")
    jobs = ((graph6, options) for graph6 in corpus)
    results = _parallel_map(_verify_job, jobs, workers, chunksize=256)
    for result in _progress(results, total, "verify", quiet):
        if result is None:
            summary.skipped += 1
            continue
        summary.add(result)
        _record(ledger, result.records())
    log.info(
        f"verify: {summary.checked} members checked, {summary.skipped} skipped,"
        + f" {len(summary.failures)} failures, {summary.anomalies} anomalies"
    )
    return summary


# @@ FUZZ


@dataclass(frozen=True)
class FuzzJob:
    index: int
    cfg: GenConfig
    attempts: int
    options: ColorerOptions


def fuzz_member(cfg: GenConfig, index: int, attempts: int) -> Optional[tuple[Graph, int]]:
    """
    The `index`-th fuzzed member under `cfg` and the seed that produced it.

    Even items are fresh draws, odd items are mutated draws. Each attempt gets
    its own derived seed; `None` once every attempt failed.
    """
    for attempt in range(attempts):
        seed = derive_seed(cfg.seed, index, attempt)
        try:
            g = random_class_member(cfg.with_seed(seed))
            if index % 2:
                g = mutate(g, seed, cfg.max_repair_steps)
            return g, seed
        except GenerationFailure as ex:
            log.debug(f"fuzz item {index}, attempt {attempt}: {ex}")
    return None


def _fuzz_job(job: FuzzJob) -> Optional[CheckResult]:
    if (found := fuzz_member(job.cfg, job.index, job.attempts)) is None:
        return None
    g, seed = found
    return check_graph(g, job.options, seed=seed)


def run_fuzz(
    cfg: GenConfig,
    count: int,
    *,
    attempts: int = 8,
    options: Optional[ColorerOptions] = None,
    workers: int = 1,
    ledger: Optional[JsonLinesLedger] = None,
    quiet: bool = False,
    campaign: str = "fuzz",
) -> CampaignSummary:
    """
    Check `count` fuzzed members. Item seeds derive from `(cfg.seed, index)`, so
    the records do not depend on `workers`.
    """
    options = options or ColorerOptions()
    summary = CampaignSummary(campaign)
    jobs = (FuzzJob(i, cfg, attempts, options) for i in range(count))
    results = _parallel_map(_fuzz_job, jobs, workers, chunksize=8)
    for index, result in enumerate(_progress(results, count, campaign, quiet)):
        if result is None:
            log.warning(f"{campaign}: skipping item {index} after {attempts} failed draws")
            summary.skipped += 1
            continue
        summary.add(result)
        _record(ledger, result.records())
    log.info(
        f"{campaign}: {summary.checked} members checked, {summary.skipped} skipped,"
        + f" {len(summary.failures)} failures, {summary.anomalies} anomalies"
    )
    return summary


def run_coverage(
    cfg: GenConfig,
    count: int,
    *,
    attempts: int = 8,
    options: Optional[ColorerOptions] = None,
    workers: int = 1,
    quiet: bool = False,
) -> CampaignSummary:
    """Which cases fire over fuzzed members; nothing is written to the ledger."""
    return run_fuzz(
        cfg,
        count,
        attempts=attempts,
        options=options,
        workers=workers,
        quiet=quiet,
        campaign="coverage",
    )


# @@ CLAIMS


def _claims_job(graph6: str) -> Optional[list[ClaimReport]]:
    g = Graph.from_graph6(graph6)
    if not is_class_member(g):
        return None
    return [check(g) for check in CLAIM_CHECKS.values()]


def run_claims(
    corpus: Iterable[str],
    *,
    workers: int = 1,
    total: Optional[int] = None,
    quiet: bool = False,
) -> dict[str, ClaimReport]:
    """Every structural claim over the class members of `corpus`, tallied per claim."""
    totals = {claim_id: ClaimReport(claim_id) for claim_id in CLAIM_CHECKS}
    results = _parallel_map(_claims_job, corpus, workers, chunksize=256)
    for reports in _progress(results, total, "claims", quiet):
        if reports is None:
            continue
        for report in reports:
            totals[report.claim_id] = totals[report.claim_id].merge(report)
    for report in totals.values():
        if not report.passed:
            log.warning(
                f"claim {report.claim_id}: {len(report.violations)} violations"
            )
    return totals


# @@ BOUNDS


@dataclass(frozen=True)
class BoundsJob:
    graph6: Optional[str] = None
    cfg: Optional[GenConfig] = None
    options: ColorerOptions = field(default_factory=ColorerOptions)


@dataclass(frozen=True)
class BoundsOutcome:
    """
    The bound reports of one graph. `violations` are failed bounds, recorded as
    anomalies; `failures` are a broken clique cover or complement bridge.
    """

    records: tuple[LedgerRecord, ...]
    violations: tuple[str, ...] = ()
    failures: tuple[str, ...] = ()


def _bounds_job(job: BoundsJob) -> Optional[BoundsOutcome]:
    if job.graph6 is not None:
        g = Graph.from_graph6(job.graph6)
        if not is_bounds_class_member(g):
            return None
    else:
        assert job.cfg is not None
        try:
            g = random_bounds_member(job.cfg)
        except GenerationFailure as ex:
            log.debug(f"bounds: {ex}")
            return None

    reports: list[BoundReport] = [verify_order_bound(g), verify_chi_bound(g)]
    violations = tuple(f"{r.check}-bound" for r in reports if not r.passed)
    failures: list[str] = []
    cover = clique_cover(g, job.options)
    if not cover.revalidate(g) or len(cover.parts) > COLOR_BOUND:
        failures.append("clique-cover")
    if not complement_bridge_holds(g):
        failures.append("complement-bridge")
    seed = job.cfg.seed if job.cfg is not None else None
    records = tuple(
        LedgerRecord(
            kind=RecordKind.BOUND_CHECK,
            graph6=g.to_graph6(),
            oracle_omega=r.omega,
            seed=seed,
            bound=r.to_json(),
            failures=tuple(failures),
        )
        for r in reports
    )
    return BoundsOutcome(records, violations, tuple(failures))


def _bounds_jobs(
    n: Optional[int],
    cfg: Optional[GenConfig],
    count: int,
    dedup: bool,
    options: ColorerOptions,
) -> Iterator[BoundsJob]:
    if n is not None:
        for graph6 in exhaustive_corpus(n, dedup):
            yield BoundsJob(graph6=graph6, options=options)
    if cfg is not None:
        for i in range(count):
            yield BoundsJob(cfg=cfg.with_seed(derive_seed(cfg.seed, i)), options=options)


def run_bounds(
    n: Optional[int],
    cfg: Optional[GenConfig],
    count: int = 0,
    *,
    dedup: bool = False,
    options: Optional[ColorerOptions] = None,
    workers: int = 1,
    ledger: Optional[JsonLinesLedger] = None,
    quiet: bool = False,
) -> CampaignSummary:
    """
    `n ≤ 7ω`, `χ ≤ 4ω`, the clique cover and the complement bridge over the
    exhaustive bounds-class corpus on `n` vertices and over `count` complements
    of fuzzed members.
    """
    options = options or ColorerOptions()
    total = count if cfg is not None else 0
    if n is not None:
        total = None if dedup else total + labeled_count(n)
    summary = CampaignSummary("bounds")
    jobs = _bounds_jobs(n, cfg, count, dedup, options)
    results = _parallel_map(_bounds_job, jobs, workers, chunksize=64)
    for outcome in _progress(results, total, "bounds", quiet):
        if outcome is None:
            summary.skipped += 1
            continue
        summary.checked += 1
        graph6 = outcome.records[0].graph6
        if outcome.violations:
            summary.anomalies += len(outcome.violations)
            log.warning(f"bounds: {graph6} violates {', '.join(outcome.violations)}")
        if outcome.failures:
            summary.failures.append(graph6)
            log.error(f"bounds: {graph6} fails {', '.join(outcome.failures)}")
        _record(ledger, outcome.records)
    log.info(
        f"bounds: {summary.checked} members checked, {summary.skipped} skipped,"
        + f" {len(summary.failures)} failures, {summary.anomalies} bound violations"
    )
    return summary


# @@ REPLAY


def run_replay(
    ledger: JsonLinesLedger, options: Optional[ColorerOptions] = None
) -> tuple[int, int]:
    """Replay every anomaly record; returns `(replayed, reproduced)`."""
    replayed = reproduced = 0
    for record in ledger.read():
        if record.kind is not RecordKind.ANOMALY or record.witness is None:
            continue
        anomaly = Anomaly(
            graph6=record.graph6,
            claim_id=record.claim_id or "",
            witness=record.witness,
            case_id=CaseId(record.case_id) if record.case_id else CaseId.FALLBACK_EXACT,
        )
        replayed += 1
        if replay_anomaly(anomaly, options):
            reproduced += 1
        else:
            log.warning(f"{record.graph6}: anomaly {record.claim_id} does not replay")
    return replayed, reproduced
