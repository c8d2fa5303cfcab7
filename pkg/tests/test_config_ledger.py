import json
from fractions import Fraction
from pathlib import Path

import pytest

from chibound.core.config import Config
from chibound.core.exceptions import (
    InvalidConfigValue,
    InvalidLogLevel,
    MalformedLedgerLine,
    UnreadableConfig,
    UnsupportedConfigFormat,
)
from chibound.core.ledger import JsonLinesLedger, LedgerRecord, RecordKind
from chibound.core.logging import resolve_level
from chibound.ext.colorer import ColorerOptions
from chibound.lib.graph import Coloring, Graph, VertexSet, Witness, WitnessKind
from chibound.lib.json import json_dumps


def test_config_defaults():
    config = Config()
    assert config.workers == 1
    assert config.edge_probability == Fraction(1, 2)
    assert config.colorer == ColorerOptions()
    assert config.gen_config(5).n == 5


def test_config_from_yaml(tmp_path: Path):
    path = tmp_path / "chibound.yaml"
    path.write_text(
        "ledger: runs/ledger.jsonl\n"
        "workers: 3\n"
        "seed: 17\n"
        "edge_probability: 1/3\n"
        "closed_neighborhood: true\n"
    )
    config = Config.from_file(path)
    assert config.ledger == Path("runs/ledger.jsonl")
    assert (config.workers, config.seed) == (3, 17)
    assert config.edge_probability == Fraction(1, 3)
    assert config.colorer.closed_neighborhood


def test_config_from_json_round_trip(tmp_path: Path):
    config = Config(workers=2, colorer=ColorerOptions(strict_three_part=True))
    path = tmp_path / "chibound.json"
    path.write_text(json.dumps(config.to_json()))
    assert Config.from_file(path) == config


def test_config_file_errors(tmp_path: Path):
    with pytest.raises(UnsupportedConfigFormat):
        Config.from_file(tmp_path / "chibound.toml")
    with pytest.raises(UnreadableConfig):
        Config.from_file(tmp_path / "missing.yaml")
    bad = tmp_path / "bad.yaml"
    bad.write_text("workers: [unclosed\n")
    with pytest.raises(UnreadableConfig):
        Config.from_file(bad)
    invalid = tmp_path / "invalid.yaml"
    invalid.write_text("workers: 0\n")
    with pytest.raises(UnreadableConfig):
        Config.from_file(invalid)


def test_config_env_and_overrides():
    config = Config().with_env({"CHIBOUND_LEDGER": "/tmp/elsewhere.jsonl"})
    assert config.ledger == Path("/tmp/elsewhere.jsonl")
    assert Config().with_env({}) == Config()
    overridden = config.with_overrides(workers=4, seed=None, closed_neighborhood=True)
    assert overridden.workers == 4
    assert overridden.seed == 0
    assert overridden.colorer.closed_neighborhood
    assert overridden.ledger == config.ledger
    with pytest.raises(InvalidConfigValue):
        Config().with_overrides(workers=0)


def test_log_levels():
    assert resolve_level("debug") == 10
    assert resolve_level(30) == 30
    with pytest.raises(InvalidLogLevel):
        resolve_level("LOUD")


def _run_record(**kwargs) -> LedgerRecord:
    return LedgerRecord(
        kind=RecordKind.RUN,
        graph6="Dhc",
        case_id="OMEGA_AT_MOST_2",
        colors_used=3,
        oracle_chi=3,
        oracle_omega=2,
        **kwargs,
    )


def test_hard_failures():
    assert not _run_record().hard_failure
    assert _run_record(failures=("invalid-coloring",)).hard_failure
    assert LedgerRecord(RecordKind.RUN, "Dhc", colors_used=2, oracle_chi=3).hard_failure
    assert LedgerRecord(RecordKind.RUN, "Dhc", colors_used=8, oracle_chi=3).hard_failure


def test_ledger_append_and_read(ledger_path: Path):
    ledger = JsonLinesLedger(ledger_path)
    assert list(ledger.read()) == []
    anomaly = LedgerRecord(
        kind=RecordKind.ANOMALY,
        graph6="Dhc",
        case_id="COA",
        claim_id="coa.b2-edge-free",
        witness=Witness.of(WitnessKind.ADJACENT_PAIR, (0, 1)),
    )
    records = [_run_record(seed=5, duration_millis=12), anomaly]
    assert ledger.append(records) == 2
    assert ledger.append([]) == 0
    assert ledger.written == 2
    assert list(ledger.read()) == records
    assert ledger_path.read_text().count("\n") == 2


def test_ledger_without_timing():
    record = _run_record(duration_millis=40)
    assert record.without_timing().duration_millis is None
    assert record.without_timing() == _run_record()


def test_malformed_ledger(ledger_path: Path):
    ledger_path.write_text(json.dumps(_run_record().to_json()) + "\n{not json\n")
    with pytest.raises(MalformedLedgerLine) as exc:
        list(JsonLinesLedger(ledger_path).read())
    assert exc.value.line == 2
    ledger_path.write_text('{"kind": "run", "graph6": "B"}\n')
    with pytest.raises(MalformedLedgerLine) as exc:
        list(JsonLinesLedger(ledger_path).read())
    assert exc.value.line == 1


def test_nested_serializables_dump_through_to_json():
    row = {"g": Graph.complete(3), "s": VertexSet.of(2, 0), "c": Coloring((1, 2, 3))}
    assert json.loads(json_dumps(row)) == {
        "g": "Bw",
        "s": [0, 2],
        "c": {"0": 1, "1": 2, "2": 3},
    }
