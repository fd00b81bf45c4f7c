"""Report documents and their renderings.

The same document builders feed the command line and the HTTP facade, so
their machine-readable outputs agree byte for byte.  Machine output keeps
full binary64 precision; the human tables round half-to-even to 5
decimals.
"""

from __future__ import annotations

import json

from . import __version__
from .ahp import WeightVector
from .gain import DecisionProblem, GainReport
from .ingest import problem_to_document
from .sensitivity import (
    BOUNDED,
    UNBOUNDED,
    BreakEvenResult,
    CrossoverScan,
    ScenarioRow,
    SweepRow,
)

TOOL = {"name": "archgain", "version": __version__}


def render_json(document: dict) -> str:
    """Canonical machine rendering: stable key order, trailing newline."""
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def _round5(value: float) -> str:
    return format(value, ".5f")


# --------------------------------------------------------------------------
# evaluate

def evaluate_document(
    problem: DecisionProblem, report: GainReport, warnings: list[str]
) -> dict:
    scores = report.scores
    apps = report.application_ids
    archs = report.architecture_ids
    return {
        "tool": dict(TOOL),
        "problem": problem_to_document(problem),
        "effective_application_weights": dict(
            zip(apps, report.application_weights)
        ),
        "effective_criteria": {
            "cost_weight": report.criteria.cost_weight,
            "performance_weight": report.criteria.performance_weight,
        },
        "scores": {
            "reciprocal_cost": dict(zip(archs, scores.reciprocal_cost)),
            "cost_share": dict(zip(archs, scores.cost_share)),
            "reciprocal_time": {
                a: dict(zip(archs, row))
                for a, row in zip(apps, scores.reciprocal_time)
            },
            "perf_share": {
                a: dict(zip(archs, row))
                for a, row in zip(apps, scores.perf_share)
            },
        },
        "per_application_gains": {
            a: dict(zip(archs, row))
            for a, row in zip(apps, report.per_application_gains)
        },
        "gains": dict(zip(archs, report.gains)),
        "ranking": list(report.ranking),
        "winner": report.winner,
        "ties": [list(group) for group in report.ties],
        "warnings": list(warnings),
    }


def evaluate_table(report: GainReport) -> str:
    lines = ["Weights"]
    for app, weight in zip(report.application_ids, report.application_weights):
        lines.append(f"  w_{app:<16} {_round5(weight)}")
    lines.append(f"  {'w_c':<18} {_round5(report.criteria.cost_weight)}")
    lines.append(f"  {'w_d':<18} {_round5(report.criteria.performance_weight)}")
    lines.append("Gain(k)")
    for arch, gain in zip(report.architecture_ids, report.gains):
        lines.append(f"  Gain({arch}){'':<{max(0, 12 - len(arch))}} {_round5(gain)}")
    lines.append(f"Winner: {report.winner}")
    if report.ties:
        groups = "; ".join(", ".join(group) for group in report.ties)
        lines.append(f"Ties: {groups}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# weights

def weights_document(
    vector: WeightVector, ratio: float, warnings: list[str]
) -> dict:
    return {
        "tool": dict(TOOL),
        "items": list(vector.labels),
        "weights": vector.as_mapping(),
        "consistency_ratio": ratio,
        "warnings": list(warnings),
    }


def weights_table(vector: WeightVector, ratio: float) -> str:
    width = max(len(label) for label in vector.labels)
    lines = ["Item weights"]
    for label, weight in zip(vector.labels, vector.weights):
        lines.append(f"  {label:<{width}}  {_round5(weight)}")
    lines.append(f"Consistency ratio: {_round5(ratio)}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# scenarios

def scenario_document(
    problem: DecisionProblem,
    rows: tuple[ScenarioRow, ...],
    warnings: list[str],
) -> dict:
    apps = problem.application_ids
    archs = problem.architecture_ids
    return {
        "tool": dict(TOOL),
        "problem": problem_to_document(problem),
        "scenarios": [
            {
                "label": row.label,
                "application_weights": dict(zip(apps, row.application_weights)),
                "criteria": {
                    "cost_weight": row.criteria.cost_weight,
                    "performance_weight": row.criteria.performance_weight,
                },
                "gains": dict(zip(archs, row.gains)),
                "winner": row.winner,
            }
            for row in rows
        ],
        "warnings": list(warnings),
    }


def scenario_table_text(
    problem: DecisionProblem, rows: tuple[ScenarioRow, ...]
) -> str:
    """One column per scenario: weights block, then the gain block."""
    apps = problem.application_ids
    archs = problem.architecture_ids
    headers = [row.label for row in rows]
    row_labels = (
        [f"w_{a}" for a in apps]
        + ["w_c", "w_d"]
        + [f"Gain({k})" for k in archs]
        + ["Winner"]
    )

    def column(row: ScenarioRow) -> list[str]:
        return (
            [_round5(w) for w in row.application_weights]
            + [_round5(row.criteria.cost_weight),
               _round5(row.criteria.performance_weight)]
            + [_round5(g) for g in row.gains]
            + [row.winner]
        )

    columns = [column(row) for row in rows]
    label_width = max((len(label) for label in row_labels), default=0)
    widths = [max(len(h), 7) for h in headers]
    lines = [
        " ".join(
            [" " * label_width]
            + [f"{h:>{w}}" for h, w in zip(headers, widths)]
        ).rstrip()
    ]
    for i, label in enumerate(row_labels):
        cells = [f"{columns[j][i]:>{widths[j]}}" for j in range(len(rows))]
        lines.append(" ".join([f"{label:<{label_width}}"] + cells).rstrip())
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# crossover scan

def crossover_document(
    problem: DecisionProblem, scan: CrossoverScan, warnings: list[str]
) -> dict:
    return {
        "tool": dict(TOOL),
        "problem": problem_to_document(problem),
        "points": [
            {
                "at_cost_weight": point.at_cost_weight,
                "winner_below": point.winner_below,
                "winner_above": point.winner_above,
            }
            for point in scan.points
        ],
        "intervals": [
            {
                "low": interval.low,
                "high": interval.high,
                "winner": interval.winner,
            }
            for interval in scan.intervals
        ],
        "permanent_ties": [list(pair) for pair in scan.permanent_ties],
        "warnings": list(warnings),
    }


def crossover_table(scan: CrossoverScan) -> str:
    lines = ["Winner by cost weight (w_c)"]
    for interval in scan.intervals:
        lines.append(
            f"  [{interval.low:.6f}, {interval.high:.6f}]  {interval.winner}"
        )
    if scan.points:
        lines.append("Crossover points")
        for point in scan.points:
            lines.append(
                f"  w_c = {point.at_cost_weight:.6f}: "
                f"{point.winner_below} -> {point.winner_above}"
            )
    else:
        lines.append("Crossover points: none")
    if scan.permanent_ties:
        pairs = "; ".join(f"{a} = {b}" for a, b in scan.permanent_ties)
        lines.append(f"Permanent ties: {pairs}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# sweep

def sweep_document(
    problem: DecisionProblem,
    application: str,
    rows: tuple[SweepRow, ...],
    warnings: list[str],
) -> dict:
    apps = problem.application_ids
    archs = problem.architecture_ids
    return {
        "tool": dict(TOOL),
        "problem": problem_to_document(problem),
        "application": application,
        "rows": [
            {
                "value": row.value,
                "application_weights": dict(zip(apps, row.application_weights)),
                "gains": dict(zip(archs, row.gains)),
                "winner": row.winner,
            }
            for row in rows
        ],
        "warnings": list(warnings),
    }


def sweep_table(
    problem: DecisionProblem, application: str, rows: tuple[SweepRow, ...]
) -> str:
    archs = problem.architecture_ids
    header = " ".join(
        [f"{'w_' + application:<12}"]
        + [f"{'Gain(' + k + ')':>12}" for k in archs]
        + ["Winner"]
    )
    lines = [header.rstrip()]
    for row in rows:
        cells = [f"{_round5(row.value):<12}"]
        cells += [f"{_round5(g):>12}" for g in row.gains]
        cells.append(row.winner)
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# break-even

def breakeven_document(
    problem: DecisionProblem, result: BreakEvenResult, warnings: list[str]
) -> dict:
    return {
        "tool": dict(TOOL),
        "problem": problem_to_document(problem),
        "architecture": result.architecture,
        "status": result.status,
        "max_cost": result.max_cost,
        "binding_competitor": result.binding_competitor,
        "reason": result.reason,
        "warnings": list(warnings),
    }


def breakeven_table(problem: DecisionProblem, result: BreakEvenResult) -> str:
    if result.status == BOUNDED:
        line = (
            f"Architecture {result.architecture} matches the top gain up to "
            f"a cost of {result.max_cost:.5f} {problem.currency} "
            f"(binding competitor: {result.binding_competitor})"
        )
    elif result.status == UNBOUNDED:
        line = f"Unbounded ({result.reason})"
    else:
        line = f"Infeasible ({result.reason})"
    return line + "\n"
