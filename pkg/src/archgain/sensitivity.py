"""What-if analysis over the gain ranking.

Because every gain is affine in the cost weight,

    G(k)(w_c) = P_k + w_c * (C[k] - P_k),    P_k = sum_j w_j D(j, k),

criteria-weight crossovers have a closed form, and treating one
architecture's cost as the unknown also solves in closed form.  Every
closed-form result is validated against plain re-evaluation in the test
suite.  All operations leave the base problem untouched.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .ahp import WeightVector
from .errors import ValidationError
from .gain import CriteriaWeights, DecisionProblem, evaluate, normalize_times

# Statuses for the break-even cost question "how expensive could this
# architecture get and still win?".
BOUNDED = "bounded"
UNBOUNDED = "unbounded"      # wins at every finite cost
INFEASIBLE = "infeasible"    # cannot match the best rival at any cost


@dataclass(frozen=True)
class Scenario:
    """One column of a what-if table: a full set of substituted weights."""

    label: str
    application_weights: WeightVector
    criteria: CriteriaWeights


@dataclass(frozen=True)
class ScenarioRow:
    label: str
    application_weights: tuple[float, ...]
    criteria: CriteriaWeights
    gains: tuple[float, ...]
    winner: str


@dataclass(frozen=True)
class CrossoverPoint:
    """Cost weight at which the recommended architecture flips."""

    at_cost_weight: float
    winner_below: str
    winner_above: str

    def __post_init__(self):
        if not 0.0 < self.at_cost_weight < 1.0:
            raise ValidationError("crossover must lie strictly inside (0, 1)")
        if self.winner_below == self.winner_above:
            raise ValidationError("a crossover must change the winner")


@dataclass(frozen=True)
class WinnerInterval:
    low: float
    high: float
    winner: str


@dataclass(frozen=True)
class CrossoverScan:
    points: tuple[CrossoverPoint, ...]
    intervals: tuple[WinnerInterval, ...]
    permanent_ties: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class BreakEvenResult:
    """Maximum cost at which an architecture still attains the top gain."""

    architecture: str
    status: str
    max_cost: float | None = None
    binding_competitor: str | None = None
    reason: str | None = None

    def __post_init__(self):
        if self.status not in (BOUNDED, UNBOUNDED, INFEASIBLE):
            raise ValidationError(f"unknown break-even status {self.status!r}")
        if self.status == BOUNDED and (
            self.max_cost is None or self.max_cost <= 0.0
        ):
            raise ValidationError("bounded result needs a positive max_cost")


def scenario_table(
    problem: DecisionProblem, scenarios: Sequence[Scenario]
) -> tuple[ScenarioRow, ...]:
    """Evaluate the problem once per scenario; one row per scenario."""
    rows = []
    for scenario in scenarios:
        if set(scenario.application_weights.labels) != set(problem.application_ids):
            raise ValidationError(
                f"scenario {scenario.label!r} weights do not match the "
                "problem's applications"
            )
        report = evaluate(
            problem,
            application_weights=scenario.application_weights.as_mapping(),
            criteria=scenario.criteria,
        )
        rows.append(
            ScenarioRow(
                label=scenario.label,
                application_weights=report.application_weights,
                criteria=scenario.criteria,
                gains=report.gains,
                winner=report.winner,
            )
        )
    return tuple(rows)


def _affine_coefficients(problem: DecisionProblem) -> tuple[np.ndarray, np.ndarray]:
    """Per architecture: performance aggregate P_k and cost share C[k]."""
    weights = np.array(problem.application_weights)
    perf_share = normalize_times(problem.times)
    cost_share = np.array(
        [1.0 / k.cost for k in problem.architectures]
    )
    cost_share /= cost_share.sum()
    return weights @ perf_share, cost_share


def _winner_at(problem: DecisionProblem, performance, cost_share, wc: float) -> str:
    gains = performance + wc * (cost_share - performance)
    ids = problem.architecture_ids
    costs = problem.costs
    best = min(range(len(ids)), key=lambda k: (-gains[k], costs[k], ids[k]))
    return ids[best]


def criteria_weight_crossovers(problem: DecisionProblem) -> CrossoverScan:
    """Partition the cost weight's [0, 1] range by winning architecture.

    Returns the winner on each interval and the exact flip points; at a
    flip the two named architectures' gains agree to within float noise.
    Architectures with identical affine gain functions are reported as
    permanent ties (the cheaper / lexicographically smaller one wins the
    intervals).
    """
    performance, cost_share = _affine_coefficients(problem)
    ids = problem.architecture_ids
    m = len(ids)

    permanent = []
    candidates = set()
    for k in range(m):
        for p in range(k + 1, m):
            dp = performance[k] - performance[p]
            dc = cost_share[k] - cost_share[p]
            if dp == 0.0 and dc == 0.0:
                permanent.append((ids[k], ids[p]))
                continue
            denominator = dp - dc
            if denominator == 0.0:
                continue  # parallel gain lines never cross
            x = dp / denominator
            if 0.0 < x < 1.0:
                candidates.add(float(x))

    edges = [0.0, *sorted(candidates), 1.0]
    raw_intervals = []
    for low, high in zip(edges, edges[1:]):
        winner = _winner_at(
            problem, performance, cost_share, (low + high) / 2.0
        )
        raw_intervals.append((low, high, winner))

    merged: list[list] = []
    for low, high, winner in raw_intervals:
        if merged and merged[-1][2] == winner:
            merged[-1][1] = high
        else:
            merged.append([low, high, winner])

    points = []
    for previous, current in zip(merged, merged[1:]):
        boundary = previous[1]
        below, above = previous[2], current[2]
        # Refine the flip point from the two winners' own intersection;
        # the merged boundary may stem from a third pair's crossing.
        a, b = ids.index(below), ids.index(above)
        dp = performance[a] - performance[b]
        denominator = dp - (cost_share[a] - cost_share[b])
        if denominator != 0.0:
            refined = dp / denominator
            if 0.0 < refined < 1.0:
                boundary = float(refined)
        points.append(
            CrossoverPoint(
                at_cost_weight=boundary,
                winner_below=below,
                winner_above=above,
            )
        )

    intervals = tuple(
        WinnerInterval(low=low, high=high, winner=winner)
        for low, high, winner in merged
    )
    return CrossoverScan(
        points=tuple(points),
        intervals=intervals,
        permanent_ties=tuple(permanent),
    )


@dataclass(frozen=True)
class SweepRow:
    value: float
    application_weights: tuple[float, ...]
    gains: tuple[float, ...]
    winner: str


def application_weight_sweep(
    problem: DecisionProblem,
    application: str,
    grid: Sequence[float],
) -> tuple[SweepRow, ...]:
    """One-at-a-time weight sweep for a single application.

    At each grid value g the chosen application's weight is set to g and
    the other applications share the remaining 1 - g in proportion to
    their original weights (so their relative preferences are preserved).
    g = 1 is allowed: the others drop to weight 0.
    """
    ids = problem.application_ids
    if application not in ids:
        raise ValidationError(f"unknown application {application!r}")
    if len(ids) < 2:
        raise ValidationError("a weight sweep needs at least 2 applications")

    target = ids.index(application)
    base = np.array(problem.application_weights)
    others_total = base.sum() - base[target]

    rows = []
    for value in grid:
        value = float(value)
        if not math.isfinite(value) or not 0.0 <= value <= 1.0:
            raise ValidationError(
                f"sweep value {value!r} outside [0, 1] for {application!r}"
            )
        weights = base * ((1.0 - value) / others_total)
        weights[target] = value
        report = evaluate(problem, application_weights=weights)
        rows.append(
            SweepRow(
                value=value,
                application_weights=report.application_weights,
                gains=report.gains,
                winner=report.winner,
            )
        )
    return tuple(rows)


def _with_cost(problem: DecisionProblem, architecture: str, cost: float) -> DecisionProblem:
    replaced = tuple(
        dataclasses.replace(k, cost=cost) if k.id == architecture else k
        for k in problem.architectures
    )
    return dataclasses.replace(problem, architectures=replaced)


def breakeven_cost(problem: DecisionProblem, architecture: str) -> BreakEvenResult:
    """Maximum cost at which ``architecture`` still matches the top gain.

    Solved in closed form: with x = 1/cost unknown and S the sum of the
    competitors' reciprocal costs, the tie against competitor p sits at
    x = (1/c_p + delta*S) / (1 - delta) with delta = w_d (P_p - P_k)/w_c.
    The binding competitor is the one demanding the largest x.  The
    bounded result is re-checked by evaluation before being returned.
    """
    ids = problem.architecture_ids
    if architecture not in ids:
        raise ValidationError(f"unknown architecture {architecture!r}")
    k = ids.index(architecture)

    wc = problem.criteria.cost_weight
    wd = problem.criteria.performance_weight
    if wc == 0.0:
        return BreakEvenResult(
            architecture=architecture,
            status=UNBOUNDED,
            reason="cost has zero weight, so no cost changes the ranking",
        )

    performance, _ = _affine_coefficients(problem)
    costs = problem.costs
    competitor_reciprocals = {
        p: 1.0 / costs[p] for p in range(len(ids)) if p != k
    }
    reciprocal_sum = sum(competitor_reciprocals.values())

    tie_costs: list[tuple[float, int]] = []
    for p, reciprocal in competitor_reciprocals.items():
        delta = float(wd * (performance[p] - performance[k]) / wc)
        if delta >= 1.0:
            return BreakEvenResult(
                architecture=architecture,
                status=INFEASIBLE,
                binding_competitor=ids[p],
                reason=(
                    f"{ids[p]!r} outperforms {architecture!r} by more than "
                    "the cost criterion can ever recover"
                ),
            )
        if delta == 0.0:
            # Pure cost race against p: the tie sits at p's cost exactly.
            tie_costs.append((costs[p], p))
            continue
        x = (reciprocal + delta * reciprocal_sum) / (1.0 - delta)
        if x > 0.0:
            tie_costs.append((float(1.0 / x), p))

    if not tie_costs:
        return BreakEvenResult(
            architecture=architecture,
            status=UNBOUNDED,
            reason=f"{architecture!r} wins at every finite cost",
        )

    max_cost, binding = min(tie_costs, key=lambda t: (t[0], costs[t[1]], ids[t[1]]))
    result = BreakEvenResult(
        architecture=architecture,
        status=BOUNDED,
        max_cost=max_cost,
        binding_competitor=ids[binding],
    )
    report = evaluate(_with_cost(problem, architecture, max_cost))
    tie_gap = report.gain_of(architecture) - report.gain_of(ids[binding])
    if abs(tie_gap) > 1e-9:
        raise ArithmeticError(
            f"break-even self-check failed: gain gap {tie_gap!r} at "
            f"cost {max_cost!r}"
        )
    return result
