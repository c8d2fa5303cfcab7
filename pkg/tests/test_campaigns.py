from pathlib import Path

import pytest

from chibound.core.campaigns import (
    CampaignSummary,
    check_graph,
    exhaustive_corpus,
    fuzz_member,
    run_bounds,
    run_claims,
    run_coverage,
    run_fuzz,
    run_replay,
    run_verify,
)
from chibound.core.ledger import JsonLinesLedger, LedgerRecord, RecordKind
from chibound.ext.colorer import CLAIM_K3P2, CaseId
from chibound.ext.decompose import CLAIM_CHECKS
from chibound.ext.generators import GenConfig
from chibound.ext.patterns import is_class_member
from chibound.lib.graph import Graph, Witness, WitnessKind


def test_check_graph_on_c5(c5: Graph):
    result = check_graph(c5)
    assert result.passed
    assert result.case_id is CaseId.OMEGA_AT_MOST_2
    assert (result.colors_used, result.oracle_chi, result.oracle_omega) == (3, 3, 2)
    [run] = result.records()
    assert run.kind is RecordKind.RUN
    assert not run.hard_failure


def test_exit_codes():
    summary = CampaignSummary("verify", checked=3, anomalies=1)
    assert summary.exit_code() == 0
    assert summary.exit_code(fail_on_anomaly=True) == 3
    summary.failures.append("Bw")
    assert summary.exit_code(fail_on_anomaly=True) == 1


def test_verify_exhaustive_small_orders(ledger_path: Path):
    ledger = JsonLinesLedger(ledger_path)
    summary = run_verify(exhaustive_corpus(5), ledger=ledger, quiet=True)
    assert summary.checked + summary.skipped == 2**10
    assert not summary.failures
    runs = [r for r in ledger.read() if r.kind is RecordKind.RUN]
    assert len(runs) == summary.checked
    assert all(is_class_member(r.graph()) for r in runs)
    assert sum(summary.cases.values()) == summary.checked


def test_verify_skips_non_members():
    corpus = [Graph.complete(4).to_graph6(), Graph.cycle(5).to_graph6()]
    summary = run_verify(corpus, quiet=True)
    assert (summary.checked, summary.skipped) == (1, 1)


def test_fuzz_is_reproducible(tmp_path: Path):
    cfg = GenConfig(8, seed=1234)
    ledgers = [JsonLinesLedger(tmp_path / f"run{i}.jsonl") for i in range(2)]
    for ledger in ledgers:
        summary = run_fuzz(cfg, 12, ledger=ledger, quiet=True)
        assert not summary.failures
    first, second = ([r.without_timing() for r in ledger.read()] for ledger in ledgers)
    assert first == second
    assert [r.seed for r in first if r.kind is RecordKind.RUN] == [
        fuzz_member(cfg, i, 8)[1] for i in range(12)
    ]


def test_coverage_counts_cases():
    summary = run_coverage(GenConfig(9, seed=7), 10, quiet=True)
    assert summary.campaign == "coverage"
    assert summary.checked + summary.skipped == 10
    assert 0.0 <= summary.named_fraction <= 1.0


def test_claims_over_small_corpus():
    reports = run_claims(exhaustive_corpus(5, dedup=True), quiet=True)
    assert set(reports) == set(CLAIM_CHECKS)
    assert all(report.passed for report in reports.values())
    assert all(report.graphs > 0 for report in reports.values())


def test_bounds_campaign(ledger_path: Path):
    ledger = JsonLinesLedger(ledger_path)
    summary = run_bounds(4, GenConfig(7, seed=3), 5, ledger=ledger, quiet=True)
    assert not summary.failures
    assert summary.anomalies == 0
    records = list(ledger.read())
    assert len(records) == 2 * summary.checked
    assert {r.bound["check"] for r in records} == {"order", "chi"}


def test_replay_reads_anomaly_records(ledger_path: Path):
    g = Graph.complete(3)
    ledger = JsonLinesLedger(ledger_path)
    ledger.append(
        [
            LedgerRecord(RecordKind.RUN, g.to_graph6(), colors_used=3, oracle_chi=3),
            LedgerRecord(
                RecordKind.ANOMALY,
                g.to_graph6(),
                case_id=CaseId.K3P2_FALLBACK.value,
                claim_id=CLAIM_K3P2,
                witness=Witness.of(WitnessKind.TRIANGLE, (0, 1, 2)),
            ),
            LedgerRecord(
                RecordKind.ANOMALY,
                g.to_graph6(),
                case_id=CaseId.COA.value,
                claim_id="coa.b2-edge-free",
                witness=Witness.of(WitnessKind.NONADJACENT_PAIR, (0, 1)),
            ),
        ]
    )
    assert run_replay(ledger) == (2, 1)


@pytest.mark.slow
def test_verify_exhaustive_seven_vertices():
    summary = run_verify(exhaustive_corpus(7, dedup=True), quiet=True)
    assert not summary.failures
    assert summary.anomalies == 0
