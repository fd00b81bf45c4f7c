"""Gain evaluation: normalized cost/performance shares and the ranking.

An architecture's gain aggregates two dimensionless share vectors: the
normalized reciprocal acquisition costs (cheaper is better) and, per
application, the normalized reciprocal execution times (faster is
better).  With application weights ``w_j`` summing to 1 and criteria
weights ``w_c + w_d = 1``::

    G(k) = w_d * sum_j w_j * D(j, k)  +  w_c * C[k]

The recommended acquisition is the architecture with the greatest gain.
All operations are pure functions over immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import ValidationError

# Application weights may drift from 1 by at most this much before the
# problem is rejected (or renormalized on explicit request).
WEIGHT_SUM_TOLERANCE = 1e-9


def _require_positive_finite(value: float, what: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise ValidationError(f"{what} must be a positive finite number, got {value!r}")
    return value


@dataclass(frozen=True)
class Application:
    """A workload in the shared mix, with its relative importance."""

    id: str
    weight: float

    def __post_init__(self):
        if not self.id:
            raise ValidationError("application id must be non-empty")
        weight = float(self.weight)
        if not math.isfinite(weight) or not 0.0 < weight <= 1.0:
            raise ValidationError(
                f"application {self.id!r}: weight must lie in (0, 1], got {self.weight!r}"
            )
        object.__setattr__(self, "weight", weight)


@dataclass(frozen=True)
class Architecture:
    """A candidate acquisition with its cost in one currency."""

    id: str
    cost: float
    currency: str = "USD"

    def __post_init__(self):
        if not self.id:
            raise ValidationError("architecture id must be non-empty")
        object.__setattr__(
            self, "cost",
            _require_positive_finite(self.cost, f"architecture {self.id!r}: cost"),
        )


@dataclass(frozen=True)
class CriteriaWeights:
    """Relative importance of acquisition cost vs performance."""

    cost_weight: float
    performance_weight: float

    def __post_init__(self):
        wc = float(self.cost_weight)
        wd = float(self.performance_weight)
        if not (math.isfinite(wc) and math.isfinite(wd)):
            raise ValidationError("criteria weights must be finite")
        if not (0.0 <= wc <= 1.0 and 0.0 <= wd <= 1.0):
            raise ValidationError("criteria weights must lie in [0, 1]")
        if abs(wc + wd - 1.0) > 1e-12:
            raise ValidationError("cost and performance weights must sum to 1")
        object.__setattr__(self, "cost_weight", wc)
        object.__setattr__(self, "performance_weight", wd)


@dataclass(frozen=True)
class TimeMatrix:
    """Complete execution-time matrix in seconds.

    Rows follow ``application_ids``, columns follow ``architecture_ids``;
    every entry is positive and finite.
    """

    application_ids: tuple[str, ...]
    architecture_ids: tuple[str, ...]
    seconds: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        n, m = len(self.application_ids), len(self.architecture_ids)
        if len(self.seconds) != n or any(len(row) != m for row in self.seconds):
            raise ValidationError(f"time matrix must be {n}x{m}")
        normalized = []
        for app, row in zip(self.application_ids, self.seconds):
            checked = tuple(
                _require_positive_finite(t, f"t({app!r}, {arch!r})")
                for arch, t in zip(self.architecture_ids, row)
            )
            normalized.append(checked)
        object.__setattr__(self, "seconds", tuple(normalized))

    @classmethod
    def from_entries(
        cls,
        application_ids: Sequence[str],
        architecture_ids: Sequence[str],
        entries: Mapping[tuple[str, str], float],
    ) -> "TimeMatrix":
        """Build from a ``(application, architecture) -> seconds`` mapping.

        The mapping must cover every pair exactly; missing or stray pairs
        are rejected by name.
        """
        application_ids = tuple(application_ids)
        architecture_ids = tuple(architecture_ids)
        known = {
            (a, k) for a in application_ids for k in architecture_ids
        }
        for pair in entries:
            if pair not in known:
                raise ValidationError(
                    f"measurement for unknown pair ({pair[0]!r}, {pair[1]!r})"
                )
        rows = []
        for app in application_ids:
            row = []
            for arch in architecture_ids:
                if (app, arch) not in entries:
                    raise ValidationError(
                        f"missing execution time for ({app!r}, {arch!r})"
                    )
                row.append(entries[(app, arch)])
            rows.append(tuple(row))
        return cls(application_ids, architecture_ids, tuple(rows))

    def array(self) -> np.ndarray:
        return np.array(self.seconds, dtype=float)


@dataclass(frozen=True)
class DecisionProblem:
    """Everything needed to rank the candidate architectures."""

    applications: tuple[Application, ...]
    architectures: tuple[Architecture, ...]
    times: TimeMatrix
    criteria: CriteriaWeights

    def __post_init__(self):
        if len(self.applications) < 1:
            raise ValidationError("at least one application is required")
        if len(self.architectures) < 2:
            raise ValidationError(
                "a decision needs at least 2 architectures to compare"
            )
        app_ids = [a.id for a in self.applications]
        arch_ids = [k.id for k in self.architectures]
        if len(set(app_ids)) != len(app_ids):
            raise ValidationError("application ids must be distinct")
        if len(set(arch_ids)) != len(arch_ids):
            raise ValidationError("architecture ids must be distinct")
        if tuple(app_ids) != self.times.application_ids:
            raise ValidationError("time matrix rows must match the applications")
        if tuple(arch_ids) != self.times.architecture_ids:
            raise ValidationError("time matrix columns must match the architectures")
        currencies = {k.currency for k in self.architectures}
        if len(currencies) > 1:
            raise ValidationError(
                f"architectures must share one currency, got {sorted(currencies)}"
            )
        drift = abs(sum(a.weight for a in self.applications) - 1.0)
        if drift > WEIGHT_SUM_TOLERANCE:
            raise ValidationError(
                f"application weights must sum to 1 (off by {drift:.3g}); "
                "renormalize explicitly if the drift is intended"
            )

    @property
    def application_ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.applications)

    @property
    def architecture_ids(self) -> tuple[str, ...]:
        return tuple(k.id for k in self.architectures)

    @property
    def application_weights(self) -> tuple[float, ...]:
        return tuple(a.weight for a in self.applications)

    @property
    def costs(self) -> tuple[float, ...]:
        return tuple(k.cost for k in self.architectures)

    @property
    def currency(self) -> str:
        return self.architectures[0].currency


@dataclass(frozen=True)
class NormalizedScores:
    """Dimensionless cost and performance shares, with audit reciprocals."""

    application_ids: tuple[str, ...]
    architecture_ids: tuple[str, ...]
    cost_share: tuple[float, ...]
    perf_share: tuple[tuple[float, ...], ...]
    reciprocal_cost: tuple[float, ...]
    reciprocal_time: tuple[tuple[float, ...], ...]


@dataclass(frozen=True)
class GainReport:
    """Result of one evaluation: gains, ranking, and the winner."""

    application_ids: tuple[str, ...]
    architecture_ids: tuple[str, ...]
    gains: tuple[float, ...]
    per_application_gains: tuple[tuple[float, ...], ...]
    ranking: tuple[str, ...]
    winner: str
    ties: tuple[tuple[str, ...], ...]
    scores: NormalizedScores
    application_weights: tuple[float, ...]
    criteria: CriteriaWeights
    renormalized: bool = False

    def gain_of(self, architecture_id: str) -> float:
        return self.gains[self.architecture_ids.index(architecture_id)]


def normalize_costs(architectures: Sequence[Architecture]) -> np.ndarray:
    """Cost shares: reciprocals of cost, normalized to sum 1.

    Cheaper architectures take a larger share; shares strictly decrease
    as an architecture's own cost rises.
    """
    for arch in architectures:
        _require_positive_finite(arch.cost, f"architecture {arch.id!r}: cost")
    reciprocals = np.array([1.0 / k.cost for k in architectures])
    return reciprocals / reciprocals.sum()


def normalize_times(times: TimeMatrix) -> np.ndarray:
    """Performance shares: per application, reciprocal times normalized to sum 1."""
    reciprocals = 1.0 / times.array()
    return reciprocals / reciprocals.sum(axis=1, keepdims=True)


def scores_for(problem: DecisionProblem) -> NormalizedScores:
    """Compute both share vectors plus the raw reciprocals for auditing."""
    cost_share = normalize_costs(problem.architectures)
    perf_share = normalize_times(problem.times)
    reciprocal_cost = tuple(1.0 / c for c in problem.costs)
    reciprocal_time = tuple(
        tuple(1.0 / t for t in row) for row in problem.times.seconds
    )
    return NormalizedScores(
        application_ids=problem.application_ids,
        architecture_ids=problem.architecture_ids,
        cost_share=tuple(cost_share.tolist()),
        perf_share=tuple(tuple(row) for row in perf_share.tolist()),
        reciprocal_cost=reciprocal_cost,
        reciprocal_time=reciprocal_time,
    )


def per_application_gain(
    problem: DecisionProblem, scores: NormalizedScores
) -> np.ndarray:
    """Single-application gains g(j, k) = w_c * C[k] + w_d * D(j, k)."""
    wc = problem.criteria.cost_weight
    wd = problem.criteria.performance_weight
    cost_share = np.array(scores.cost_share)
    perf_share = np.array(scores.perf_share)
    return wc * cost_share[np.newaxis, :] + wd * perf_share


def _effective_weights(
    problem: DecisionProblem,
    application_weights,
    renormalize: bool,
) -> tuple[np.ndarray, bool]:
    if application_weights is None:
        return np.array(problem.application_weights), False
    if isinstance(application_weights, Mapping):
        missing = set(problem.application_ids) - set(application_weights)
        stray = set(application_weights) - set(problem.application_ids)
        if missing or stray:
            raise ValidationError(
                f"substituted weights must cover the problem's applications "
                f"exactly (missing {sorted(missing)}, unknown {sorted(stray)})"
            )
        weights = np.array(
            [float(application_weights[a]) for a in problem.application_ids]
        )
    else:
        weights = np.array([float(w) for w in application_weights])
        if weights.shape != (len(problem.applications),):
            raise ValidationError(
                f"expected {len(problem.applications)} weights, got {len(weights)}"
            )
    if not np.all(np.isfinite(weights)) or np.any(weights < 0.0):
        raise ValidationError("substituted weights must be finite and >= 0")
    total = float(weights.sum())
    if abs(total - 1.0) <= WEIGHT_SUM_TOLERANCE:
        return weights, False
    if not renormalize:
        raise ValidationError(
            f"application weights sum to {total!r}, not 1; "
            "pass renormalize=True to rescale proportionally"
        )
    if total <= 0.0:
        raise ValidationError("cannot renormalize weights that sum to 0")
    return weights / total, True


def evaluate(
    problem: DecisionProblem,
    *,
    application_weights: Sequence[float] | Mapping[str, float] | None = None,
    criteria: CriteriaWeights | None = None,
    renormalize: bool = False,
) -> GainReport:
    """Evaluate the gain of every architecture and rank them.

    ``application_weights`` and ``criteria`` substitute the problem's own
    weights for what-if evaluation (zero weights are allowed there, so a
    sweep can switch an application off).  Weights that do not sum to 1
    within 1e-9 are rejected unless ``renormalize`` is set, in which case
    they are rescaled proportionally and the report is flagged.
    """
    weights, renormalized = _effective_weights(
        problem, application_weights, renormalize
    )
    crit = problem.criteria if criteria is None else criteria
    wc, wd = crit.cost_weight, crit.performance_weight

    scores = scores_for(problem)
    cost_share = np.array(scores.cost_share)
    perf_share = np.array(scores.perf_share)

    performance = weights @ perf_share           # sum_j w_j D(j, k)
    gains = wd * performance + wc * cost_share
    per_app = wc * cost_share[np.newaxis, :] + wd * perf_share

    ids = problem.architecture_ids
    costs = problem.costs
    order = sorted(
        range(len(ids)), key=lambda k: (-gains[k], costs[k], ids[k])
    )
    ranking = tuple(ids[k] for k in order)

    groups: dict[float, list[str]] = {}
    for k in order:
        groups.setdefault(float(gains[k]), []).append(ids[k])
    ties = tuple(
        tuple(members) for members in groups.values() if len(members) > 1
    )

    return GainReport(
        application_ids=problem.application_ids,
        architecture_ids=ids,
        gains=tuple(gains.tolist()),
        per_application_gains=tuple(tuple(row) for row in per_app.tolist()),
        ranking=ranking,
        winner=ranking[0],
        ties=ties,
        scores=scores,
        application_weights=tuple(weights.tolist()),
        criteria=crit,
        renormalized=renormalized,
    )


def select(report: GainReport) -> str:
    """The architecture with the greatest gain.

    Ties are already resolved in the report (lower cost first, then
    lexicographically smaller id) and flagged in ``report.ties``.
    """
    if not report.ranking:
        raise ValidationError("empty report")
    return report.ranking[0]
