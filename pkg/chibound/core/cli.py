import argparse
import sys
from fractions import Fraction
from logging import Logger, getLogger
from pathlib import Path
from typing import Any, Callable, Iterator, Optional, Sequence, TextIO

from dotenv import load_dotenv

from chibound.core.campaigns import (
    CampaignSummary,
    exhaustive_corpus,
    run_bounds,
    run_claims,
    run_coverage,
    run_fuzz,
    run_replay,
    run_verify,
)
from chibound.core.commands import (
    CommandResult,
    cmd_check,
    cmd_chi,
    cmd_color,
    cmd_decompose,
    cmd_omega,
    cmd_patterns,
)
from chibound.core.config import Config
from chibound.core.ledger import JsonLinesLedger
from chibound.core.logging import LOG_LEVELS, setup_logging
from chibound.ext.generators import enumerate_graphs, labeled_count, named
from chibound.ext.patterns import is_class_member
from chibound.lib import ResponsiveException, json_dumps
from chibound.lib.constants import PYTHON_VERSION, TOOL_VERSION
from chibound.lib.graph import Graph, iter_graph6_lines
from chibound.lib.utils import fraction_from_data

__all__ = (
    "EXIT_OK",
    "EXIT_FAILURE",
    "EXIT_USAGE",
    "EXIT_ANOMALY",
    "build_parser",
    "main",
    "run",
)


EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_ANOMALY = 3

FORMATS = ("graph6", "json")


log: Logger = getLogger(__name__)


# @@ ARGUMENTS


def _triangle(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three vertices like 0,1,2: {text}")


def _fraction(text: str) -> Fraction:
    try:
        return fraction_from_data(text)
    except Exception:
        raise argparse.ArgumentTypeError(f"expected a probability like 1/2: {text}")


def _add_input(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--in",
        dest="input",
        help="Read graph6 lines from this file instead of stdin",
        type=Path,
    )


def _add_format(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--format",
        help="Plain lines (graph6) or one JSON document per line",
        choices=FORMATS,
        default="graph6",
    )


def _add_colorer(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--closed",
        help="Build D1 from closed neighborhoods",
        action="store_true",
        default=None,
    )
    parser.add_argument(
        "--strict",
        help="Also enforce the V3-neighborhood hypothesis of the three-part coloring",
        action="store_true",
        default=None,
    )


def _add_campaign(parser: argparse.ArgumentParser, *, ledger: bool = True):
    parser.add_argument("--workers", help="Worker processes", type=int)
    if ledger:
        parser.add_argument("--ledger", help="JSONL ledger to append to", type=Path)
    parser.add_argument(
        "--fail-on-anomaly",
        help="Exit with status 3 when any anomaly was recorded",
        action="store_true",
    )


def _add_fuzz(parser: argparse.ArgumentParser, *, required_n: bool = True):
    parser.add_argument("--n", help="Vertex count", type=int, required=required_n)
    parser.add_argument("--count", help="Number of graphs", type=int, default=100)
    parser.add_argument("--seed", help="Base seed", type=int)
    parser.add_argument(
        "--edge-probability",
        help="Edge probability of the random draws (e.g. 1/2)",
        type=_fraction,
    )


def build_parser() -> argparse.ArgumentParser:
    arg_parser = argparse.ArgumentParser(
        prog="chibound",
        description="Machine-checked 7-coloring of (P3∪P2, K4)-free graphs.",
    )
    arg_parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {TOOL_VERSION} (Python {PYTHON_VERSION})",
    )
    arg_parser.add_argument(
        "--log", help="Log level", default="WARNING", choices=LOG_LEVELS
    )
    arg_parser.add_argument(
        "--envfile",
        help="The .env file to load environment variables from (defaults to .env)",
        default=".env",
        type=Path,
    )
    arg_parser.add_argument(
        "--config", help="Configuration file (JSON or YAML)", type=Path
    )
    arg_parser.add_argument("--quiet", help="No progress bars", action="store_true")
    commands = arg_parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("color", help="Color graphs with the case engine")
    _add_input(p)
    _add_format(p)
    _add_colorer(p)

    for name, text in (
        ("chi", "Exact chromatic number"),
        ("omega", "Exact clique number"),
        ("check", "Class membership with a witness"),
        ("patterns", "Catalog patterns present, with first occurrences"),
    ):
        p = commands.add_parser(name, help=text)
        _add_input(p)
        _add_format(p)

    p = commands.add_parser("decompose", help="D1/D2 and the partition around a triangle")
    _add_input(p)
    _add_format(p)
    p.add_argument(
        "--triangle", help="Triangle to decompose around, e.g. 0,1,2", type=_triangle
    )
    p.add_argument(
        "--closed", help="Build D1 from closed neighborhoods", action="store_true"
    )

    p = commands.add_parser("enumerate", help="Every labeled graph on n vertices")
    p.add_argument("--n", help="Vertex count (at most 7)", type=int, required=True)
    p.add_argument("--dedup", help="One graph per isomorphism class", action="store_true")
    p.add_argument("--members", help="Only (P3∪P2, K4)-free graphs", action="store_true")

    p = commands.add_parser("named", help="The graph of a catalog pattern")
    p.add_argument("name", help="Pattern name; family members take a +edge suffix")

    p = commands.add_parser("verify", help="Check every class member of a corpus")
    scope = p.add_mutually_exclusive_group(required=True)
    scope.add_argument("--n", help="Exhaustive corpus on n vertices", type=int)
    scope.add_argument("--in", dest="input", help="graph6 corpus file", type=Path)
    p.add_argument("--dedup", help="One graph per isomorphism class", action="store_true")
    _add_format(p)
    _add_campaign(p)
    _add_colorer(p)

    p = commands.add_parser("fuzz", help="Check random class members")
    _add_fuzz(p)
    _add_format(p)
    _add_campaign(p)
    _add_colorer(p)

    p = commands.add_parser("coverage", help="Histogram of the cases that fire")
    _add_fuzz(p)
    _add_format(p)
    _add_campaign(p, ledger=False)
    _add_colorer(p)

    p = commands.add_parser("claims", help="Tally the structural claims over a corpus")
    scope = p.add_mutually_exclusive_group(required=True)
    scope.add_argument("--n", help="Exhaustive corpus on n vertices", type=int)
    scope.add_argument("--in", dest="input", help="graph6 corpus file", type=Path)
    p.add_argument("--dedup", help="One graph per isomorphism class", action="store_true")
    _add_format(p)
    _add_campaign(p, ledger=False)

    p = commands.add_parser(
        "bounds", help="Order and χ bounds for (4K1, co-(P3∪P2))-free graphs"
    )
    p.add_argument("--n", help="Exhaustive corpus on n vertices", type=int)
    p.add_argument("--size", help="Vertex count of the fuzzed members", type=int)
    p.add_argument("--count", help="Number of fuzzed members", type=int, default=0)
    p.add_argument("--seed", help="Base seed", type=int)
    p.add_argument("--dedup", help="One graph per isomorphism class", action="store_true")
    _add_format(p)
    _add_campaign(p)

    p = commands.add_parser("replay", help="Replay the anomaly records of a ledger")
    p.add_argument("--ledger", help="JSONL ledger to read", type=Path)
    p.add_argument(
        "--fail-on-anomaly",
        help="Exit with status 3 when an anomaly no longer replays",
        action="store_true",
    )

    return arg_parser


# @@ HELPERS


def _load_config(args: argparse.Namespace) -> Config:
    config = Config.from_file(args.config) if args.config else Config()
    config = config.with_env()
    return config.with_overrides(
        ledger=getattr(args, "ledger", None),
        workers=getattr(args, "workers", None),
        seed=getattr(args, "seed", None),
        edge_probability=getattr(args, "edge_probability", None),
        closed_neighborhood=getattr(args, "closed", None),
        strict_three_part=getattr(args, "strict", None),
    )


def _graphs(args: argparse.Namespace, stdin: TextIO) -> Iterator[Graph]:
    if args.input is None:
        yield from iter_graph6_lines(stdin)
        return
    with open(args.input) as fp:
        yield from iter_graph6_lines(fp)


def _emit(out: TextIO, fmt: str, doc: Any, lines: Sequence[str]):
    if fmt == "json":
        out.write(json_dumps(doc) + "\n")
    else:
        out.writelines(line + "\n" for line in lines)


def _summary_lines(summary: CampaignSummary) -> list[str]:
    lines = [
        f"{summary.campaign}: checked={summary.checked} skipped={summary.skipped}"
        + f" failures={len(summary.failures)} anomalies={summary.anomalies}"
    ]
    for case, n in sorted(summary.cases.items()):
        lines.append(f"  {case}: {n}")
    if summary.cases:
        lines.append(f"  named fraction: {summary.named_fraction:.4f}")
    lines.extend(f"  failed: {graph6}" for graph6 in summary.failures)
    return lines


def _corpus(args: argparse.Namespace) -> tuple[Iterator[str], Optional[int]]:
    if args.n is not None:
        total = None if args.dedup else labeled_count(args.n)
        return exhaustive_corpus(args.n, args.dedup), total
    with open(args.input) as fp:
        graphs = list(iter_graph6_lines(fp))
    return (g.to_graph6() for g in graphs), len(graphs)


# @@ COMMANDS


def _single(fn: Callable[[Graph], CommandResult]):
    def handler(
        args: argparse.Namespace, config: Config, out: TextIO, stdin: TextIO
    ) -> int:
        status = EXIT_OK
        for g in _graphs(args, stdin):
            result = fn(g)
            _emit(out, args.format, result.doc, result.lines)
            if not result.ok:
                status = EXIT_FAILURE
        return status

    return handler


def _color(args, config: Config, out: TextIO, stdin: TextIO) -> int:
    return _single(lambda g: cmd_color(g, config.colorer))(args, config, out, stdin)


def _decompose(args, config: Config, out: TextIO, stdin: TextIO) -> int:
    return _single(lambda g: cmd_decompose(g, args.triangle, args.closed))(
        args, config, out, stdin
    )


def _enumerate(args, config: Config, out: TextIO, stdin: TextIO) -> int:
    for g in enumerate_graphs(args.n, args.dedup):
        if args.members and not is_class_member(g):
            continue
        out.write(g.to_graph6() + "\n")
    return EXIT_OK


def _named(args, config: Config, out: TextIO, stdin: TextIO) -> int:
    out.write(named(args.name).to_graph6() + "\n")
    return EXIT_OK


def _ledger(config: Config) -> JsonLinesLedger:
    log.info(f"Ledger: {config.ledger}")
    return JsonLinesLedger(config.ledger)


def _verify(args, config: Config, out: TextIO, stdin: TextIO) -> int:
    corpus, total = _corpus(args)
    summary = run_verify(
        corpus,
        options=config.colorer,
        workers=config.workers,
        ledger=_ledger(config),
        total=total,
        quiet=args.quiet,
    )
    _emit(out, args.format, summary, _summary_lines(summary))
    return summary.exit_code(args.fail_on_anomaly)


def _fuzz(args, config: Config, out: TextIO, stdin: TextIO) -> int:
    summary = run_fuzz(
        config.gen_config(args.n),
        args.count,
        attempts=config.max_generation_attempts,
        options=config.colorer,
        workers=config.workers,
        ledger=_ledger(config),
        quiet=args.quiet,
    )
    _emit(out, args.format, summary, _summary_lines(summary))
    return summary.exit_code(args.fail_on_anomaly)


def _coverage(args, config: Config, out: TextIO, stdin: TextIO) -> int:
    summary = run_coverage(
        config.gen_config(args.n),
        args.count,
        attempts=config.max_generation_attempts,
        options=config.colorer,
        workers=config.workers,
        quiet=args.quiet,
    )
    _emit(out, args.format, summary, _summary_lines(summary))
    return summary.exit_code(args.fail_on_anomaly)


def _claims(args, config: Config, out: TextIO, stdin: TextIO) -> int:
    corpus, total = _corpus(args)
    reports = run_claims(corpus, workers=config.workers, total=total, quiet=args.quiet)
    lines = [
        f"{r.claim_id}: graphs={r.graphs} hits={r.hypothesis_hits}"
        + f" violations={len(r.violations)}"
        for r in reports.values()
    ]
    _emit(out, args.format, list(reports.values()), lines)
    violated = any(not r.passed for r in reports.values())
    return EXIT_ANOMALY if violated and args.fail_on_anomaly else EXIT_OK


def _bounds(args, config: Config, out: TextIO, stdin: TextIO) -> int:
    if args.n is None and not (args.size is not None and args.count):
        raise ResponsiveException("bounds needs --n, or --size with a positive --count")
    cfg = config.gen_config(args.size) if args.size is not None else None
    summary = run_bounds(
        args.n,
        cfg,
        args.count,
        dedup=args.dedup,
        options=config.colorer,
        workers=config.workers,
        ledger=_ledger(config),
        quiet=args.quiet,
    )
    _emit(out, args.format, summary, _summary_lines(summary))
    return summary.exit_code(args.fail_on_anomaly)


def _replay(args, config: Config, out: TextIO, stdin: TextIO) -> int:
    replayed, reproduced = run_replay(_ledger(config), config.colorer)
    out.write(f"replay: anomalies={replayed} reproduced={reproduced}\n")
    if args.fail_on_anomaly and reproduced < replayed:
        return EXIT_ANOMALY
    return EXIT_OK


HANDLERS: dict[str, Callable[..., int]] = {
    "color": _color,
    "chi": _single(cmd_chi),
    "omega": _single(cmd_omega),
    "check": _single(cmd_check),
    "patterns": _single(cmd_patterns),
    "decompose": _decompose,
    "enumerate": _enumerate,
    "named": _named,
    "verify": _verify,
    "fuzz": _fuzz,
    "coverage": _coverage,
    "claims": _claims,
    "bounds": _bounds,
    "replay": _replay,
}


# @@ ENTRY POINT


def main(
    argv: Optional[Sequence[str]] = None,
    out: Optional[TextIO] = None,
    stdin: Optional[TextIO] = None,
) -> int:
    """
    Run one command and return its exit status: 0 when everything held, 1 when
    a coloring or a cover failed validation, 2 for bad input or usage, and 3
    for anomalies under `--fail-on-anomaly`.
    """
    parsed_args = build_parser().parse_args(argv)

    # Setup logging and load environment variables
    setup_logging(parsed_args.log, detailed=parsed_args.log in ("DEBUG", "INFO"))
    load_dotenv(parsed_args.envfile)
    log.info(f"chibound {TOOL_VERSION}, command: {parsed_args.command}")

    try:
        config = _load_config(parsed_args)
        log.debug(f"Configuration: {json_dumps(config)}")
        handler = HANDLERS[parsed_args.command]
        return handler(parsed_args, config, out or sys.stdout, stdin or sys.stdin)
    except ResponsiveException as ex:
        log.debug(f"{type(ex).__name__}: {ex}")
        return ex.respond()


def run():
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        sys.exit(130)
