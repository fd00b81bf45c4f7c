"""Command-line front door.

Subcommands: ``evaluate``, ``weights``, ``sensitivity``, ``breakeven``,
``serve``.  Exit codes: 0 success, 1 usage (bad flags, unreadable file),
2 validation (bad document or values), 3 internal fault.  Machine output
(``--format json``) is byte-identical to the HTTP facade's responses.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, ahp, report
from .errors import InputError, SchemaError, ValidationError
from .gain import evaluate
from .ingest import (
    load_problem_file,
    load_scenarios,
    parse_weights_document,
)
from .sensitivity import (
    application_weight_sweep,
    breakeven_cost,
    criteria_weight_crossovers,
    scenario_table,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_INTERNAL = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; this tool reserves 2
    # for validation failures, so usage problems surface as exceptions.
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _read_json(path: str) -> dict:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise SchemaError(f"not valid JSON: {error}", path=path) from None


def _emit(args, document: dict, table: str) -> None:
    if args.format == "json":
        sys.stdout.write(report.render_json(document))
    else:
        sys.stdout.write(table)


def _warn(args, warnings) -> None:
    if not args.quiet:
        for message in warnings:
            print(f"warning: {message}", file=sys.stderr)


def _cmd_evaluate(args) -> int:
    problem, warnings = load_problem_file(
        args.problem, renormalize_weights=args.renormalize
    )
    result = evaluate(problem)
    _warn(args, warnings)
    _emit(
        args,
        report.evaluate_document(problem, result, warnings),
        report.evaluate_table(result),
    )
    return EXIT_OK


def _cmd_weights(args) -> int:
    matrix = parse_weights_document(_read_json(args.judgments))
    vector = ahp.derive_weights(matrix)
    ratio = ahp.consistency_ratio(matrix)
    warnings = ahp.advisories(matrix, ratio)
    _warn(args, warnings)
    _emit(
        args,
        report.weights_document(vector, ratio, warnings),
        report.weights_table(vector, ratio),
    )
    return EXIT_OK


def _parse_grid(raw: str) -> list[float]:
    if raw.strip() == "":
        return []
    try:
        return [float(cell) for cell in raw.split(",")]
    except ValueError:
        raise _UsageError(f"archgain sensitivity: bad grid value in {raw!r}")


def _cmd_sensitivity(args) -> int:
    problem, warnings = load_problem_file(args.problem)
    _warn(args, warnings)
    if args.mode == "scenarios":
        if not args.scenarios:
            raise _UsageError(
                "archgain sensitivity: --scenarios FILE is required in "
                "scenarios mode"
            )
        scenarios = load_scenarios(_read_json(args.scenarios), problem)
        rows = scenario_table(problem, scenarios)
        _emit(
            args,
            report.scenario_document(problem, rows, warnings),
            report.scenario_table_text(problem, rows),
        )
    elif args.mode == "crossover":
        scan = criteria_weight_crossovers(problem)
        _emit(
            args,
            report.crossover_document(problem, scan, warnings),
            report.crossover_table(scan),
        )
    else:  # sweep
        if not args.application:
            raise _UsageError(
                "archgain sensitivity: --application ID is required in "
                "sweep mode"
            )
        if args.grid is None:
            raise _UsageError(
                "archgain sensitivity: --grid VALUES is required in sweep mode"
            )
        rows = application_weight_sweep(
            problem, args.application, _parse_grid(args.grid)
        )
        _emit(
            args,
            report.sweep_document(problem, args.application, rows, warnings),
            report.sweep_table(problem, args.application, rows),
        )
    return EXIT_OK


def _cmd_breakeven(args) -> int:
    problem, warnings = load_problem_file(args.problem)
    result = breakeven_cost(problem, args.architecture)
    _warn(args, warnings)
    _emit(
        args,
        report.breakeven_document(problem, result, warnings),
        report.breakeven_table(problem, result),
    )
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(
        create_app(cors=not args.no_cors),
        host=args.host,
        port=args.port,
        log_level="warning" if args.quiet else "info",
    )
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(
        prog="archgain",
        description=(
            "Rank candidate compute architectures for a shared set of "
            "applications by measured execution time, acquisition cost, "
            "and pairwise-judgment weights."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"archgain {__version__}"
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("table", "json"),
        default="table",
        help="human table (default) or machine-readable JSON",
    )
    common.add_argument(
        "--quiet", action="store_true", help="suppress warnings on stderr"
    )

    commands = parser.add_subparsers(
        dest="command", required=True, parser_class=_Parser
    )

    cmd = commands.add_parser(
        "evaluate", parents=[common], help="rank the architectures of a problem"
    )
    cmd.add_argument("problem", help="problem document (JSON)")
    cmd.add_argument(
        "--renormalize",
        action="store_true",
        help="rescale drifting application weights proportionally to sum 1",
    )
    cmd.set_defaults(handler=_cmd_evaluate)

    cmd = commands.add_parser(
        "weights",
        parents=[common],
        help="derive weights from a pairwise-judgment document",
    )
    cmd.add_argument("judgments", help="judgment document (JSON)")
    cmd.set_defaults(handler=_cmd_weights)

    cmd = commands.add_parser(
        "sensitivity", parents=[common], help="what-if analysis on a problem"
    )
    cmd.add_argument("problem", help="problem document (JSON)")
    cmd.add_argument(
        "--mode",
        required=True,
        choices=("scenarios", "crossover", "sweep"),
        help="scenario table, cost-weight crossover scan, or weight sweep",
    )
    cmd.add_argument("--scenarios", help="scenario document (JSON), scenarios mode")
    cmd.add_argument("--application", help="application to sweep, sweep mode")
    cmd.add_argument(
        "--grid", help="comma-separated weights in [0,1], sweep mode"
    )
    cmd.set_defaults(handler=_cmd_sensitivity)

    cmd = commands.add_parser(
        "breakeven",
        parents=[common],
        help="maximum cost at which an architecture still wins",
    )
    cmd.add_argument("problem", help="problem document (JSON)")
    cmd.add_argument("architecture", help="architecture id")
    cmd.set_defaults(handler=_cmd_breakeven)

    cmd = commands.add_parser(
        "serve", parents=[common], help="start the HTTP facade"
    )
    cmd.add_argument("--host", default="127.0.0.1")
    cmd.add_argument("--port", type=int, default=8710)
    cmd.add_argument(
        "--no-cors", action="store_true", help="disable cross-origin headers"
    )
    cmd.set_defaults(handler=_cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.handler(args)
    except _UsageError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_VALIDATION
    except Exception as error:  # noqa: BLE001 - last-resort fault barrier
        print(f"internal error: {error}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
