import json
from io import StringIO
from pathlib import Path

import pytest

from chibound.core.cli import EXIT_OK, EXIT_USAGE, main
from chibound.lib.graph import Graph


def _run(argv: list[str], stdin: str = "") -> tuple[int, list[str]]:
    out = StringIO()
    argv = ["--quiet", "--envfile", "/nonexistent/.env", *argv]
    status = main(argv, out, StringIO(stdin))
    return status, out.getvalue().splitlines()


def test_chi_from_stdin():
    status, lines = _run(["chi"], "Bw\n")
    assert status == EXIT_OK
    assert lines[0].startswith("Bw\tchi=3\t")


def test_color_json_output():
    c5 = Graph.cycle(5).to_graph6()
    status, lines = _run(["color", "--format", "json"], f"{c5}\n")
    assert status == EXIT_OK
    doc = json.loads(lines[0])
    assert doc["graph6"] == c5
    assert doc["k"] == 3
    assert doc["valid"] is True
    assert doc["trace"]["case"] == "OMEGA_AT_MOST_2"


def test_color_rejects_non_members():
    status, _ = _run(["color"], Graph.complete(4).to_graph6() + "\n")
    assert status == EXIT_USAGE


def test_bad_graph6_is_a_usage_error():
    status, _ = _run(["omega"], "B\n")
    assert status == EXIT_USAGE


def test_check_names_the_witness():
    status, lines = _run(["check"], Graph.complete(4).to_graph6() + "\nBw\n")
    assert status == EXIT_OK
    assert "\tnon-member\tk4: " in lines[0]
    assert lines[1] == "Bw\tmember"


def test_input_file(tmp_path: Path):
    path = tmp_path / "in.g6"
    path.write_text("Bw\nDhc\n")
    status, lines = _run(["omega", "--in", str(path)])
    assert status == EXIT_OK
    assert [line.split("\t")[1] for line in lines] == ["omega=3", "omega=2"]


def test_decompose_with_triangle():
    status, lines = _run(["decompose", "--triangle", "0,1,2"], "Bw\n")
    assert status == EXIT_OK
    assert lines[0] == "Bw\tD1=0 1 2\tD2=-"
    assert lines[1] == "  triangle 0 1 2"


def test_enumerate_and_named():
    status, lines = _run(["enumerate", "--n", "3", "--dedup"])
    assert status == EXIT_OK
    assert len(lines) == 4
    status, lines = _run(["named", "c5"])
    assert lines == [Graph.cycle(5).to_graph6()]
    status, _ = _run(["named", "nonesuch"])
    assert status == EXIT_USAGE


def test_verify_writes_ledger(tmp_path: Path):
    ledger = tmp_path / "ledger.jsonl"
    status, lines = _run(
        ["verify", "--n", "4", "--ledger", str(ledger), "--format", "json"]
    )
    assert status == EXIT_OK
    summary = json.loads(lines[0])
    assert summary["campaign"] == "verify"
    assert summary["checked"] + summary["skipped"] == 64
    assert not summary["failures"]
    assert ledger.exists()


def test_fuzz_and_replay(tmp_path: Path):
    ledger = tmp_path / "ledger.jsonl"
    status, lines = _run(
        ["fuzz", "--n", "7", "--count", "4", "--seed", "99", "--ledger", str(ledger)]
    )
    assert status == EXIT_OK
    assert lines[0].startswith("fuzz: checked=")
    status, lines = _run(["replay", "--ledger", str(ledger)])
    assert status == EXIT_OK
    assert lines[0].startswith("replay: anomalies=")


def test_bounds_needs_a_corpus(tmp_path: Path):
    status, _ = _run(["bounds"])
    assert status == EXIT_USAGE
    ledger = tmp_path / "ledger.jsonl"
    status, lines = _run(["bounds", "--n", "4", "--ledger", str(ledger)])
    assert status == EXIT_OK
    assert lines[0].startswith("bounds: checked=63 skipped=1")


def test_unsupported_config(tmp_path: Path):
    out = StringIO()
    path = tmp_path / "chibound.toml"
    path.write_text("")
    assert main(["--config", str(path), "named", "c5"], out) == EXIT_USAGE


def test_argparse_errors_exit_with_usage():
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == EXIT_USAGE

