"""Problem-document loading, validation, and benchmark-run aggregation.

A problem arrives as one JSON document (applications, architectures,
measurements, weights or judgment blocks, criteria).  Loading never
silently alters user-provided numbers: every transformation performed on
the way to a :class:`~archgain.gain.DecisionProblem` (run aggregation,
judgment-derived weights, renormalization, defaults) is recorded in the
returned warning list.
"""

from __future__ import annotations

import csv
import io
import json
import math
import statistics
import warnings as _warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from scipy import stats as _scipy_stats

from . import ahp
from .errors import SchemaError, ValidationError
from .gain import (
    Application,
    Architecture,
    CriteriaWeights,
    DecisionProblem,
    TimeMatrix,
)
from .sensitivity import Scenario

# Measurement quality bar: warn when the confidence half-width exceeds
# this fraction of the mean.
DEFAULT_CI_WARN_THRESHOLD = 0.01
DEFAULT_CONFIDENCE = 0.95

CSV_HEADER = ("application", "architecture", "seconds")


class PrecisionWarning(UserWarning):
    """Measurement noise exceeds the configured quality bar."""


@dataclass(frozen=True)
class RunSet:
    """Repeated timing samples for one (application, architecture) pair."""

    application: str
    architecture: str
    samples: tuple[float, ...]

    def __post_init__(self):
        if not self.samples:
            raise ValidationError(
                f"t({self.application!r}, {self.architecture!r}): no samples"
            )
        for sample in self.samples:
            if not math.isfinite(sample) or sample <= 0.0:
                raise ValidationError(
                    f"t({self.application!r}, {self.architecture!r}): "
                    f"sample {sample!r} must be a positive finite number"
                )


@dataclass(frozen=True)
class MeasurementSummary:
    """Aggregate of one run set: mean, spread, confidence half-width."""

    mean: float
    stddev: float
    ci95_halfwidth: float
    count: int

    @property
    def relative_halfwidth(self) -> float:
        return self.ci95_halfwidth / self.mean


def aggregate_runs(
    runs: RunSet,
    *,
    confidence: float = DEFAULT_CONFIDENCE,
    warn_threshold: float = DEFAULT_CI_WARN_THRESHOLD,
) -> MeasurementSummary:
    """Arithmetic mean, sample standard deviation, and Student-t interval.

    The standard deviation uses the n-1 denominator and is 0 for a single
    run, as is the half-width.  A :class:`PrecisionWarning` is emitted
    when the half-width exceeds ``warn_threshold`` of the mean.
    """
    samples = runs.samples
    n = len(samples)
    mean = statistics.fmean(samples)
    if n == 1:
        stddev = 0.0
        halfwidth = 0.0
    else:
        stddev = statistics.stdev(samples)
        quantile = float(_scipy_stats.t.ppf(0.5 + confidence / 2.0, n - 1))
        halfwidth = quantile * stddev / math.sqrt(n)
    summary = MeasurementSummary(
        mean=mean, stddev=stddev, ci95_halfwidth=halfwidth, count=n
    )
    if halfwidth / mean > warn_threshold:
        _warnings.warn(
            f"t({runs.application!r}, {runs.architecture!r}): "
            f"{confidence:.0%} confidence half-width is "
            f"{summary.relative_halfwidth:.1%} of the mean "
            f"(threshold {warn_threshold:.0%})",
            PrecisionWarning,
            stacklevel=2,
        )
    return summary


# --------------------------------------------------------------------------
# document schema helpers

def _as_mapping(value, path: str) -> Mapping:
    if not isinstance(value, Mapping):
        raise SchemaError("expected an object", path=path)
    return value

def _as_list(value, path: str) -> list:
    if not isinstance(value, list):
        raise SchemaError("expected an array", path=path)
    return value

def _as_str(value, path: str) -> str:
    if not isinstance(value, str) or not value:
        raise SchemaError("expected a non-empty string", path=path)
    return value

def _as_number(value, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError("expected a number", path=path)
    return float(value)

def _check_keys(mapping: Mapping, allowed: set[str], path: str):
    unknown = set(mapping) - allowed
    if unknown:
        raise SchemaError(f"unknown keys {sorted(unknown)}", path=path)


def _parse_judgments(
    entries, path: str
) -> list[tuple[str, str, float]]:
    """Shared parser for ``{more_important, less_important, intensity}``."""
    triples = []
    for i, raw in enumerate(_as_list(entries, path)):
        entry_path = f"{path}[{i}]"
        entry = _as_mapping(raw, entry_path)
        _check_keys(
            entry, {"more_important", "less_important", "intensity"}, entry_path
        )
        for key in ("more_important", "less_important", "intensity"):
            if key not in entry:
                raise SchemaError(f"missing key {key!r}", path=entry_path)
        more = _as_str(entry["more_important"], f"{entry_path}.more_important")
        less = _as_str(entry["less_important"], f"{entry_path}.less_important")
        intensity = _as_number(entry["intensity"], f"{entry_path}.intensity")
        # Direction is explicit here, so reciprocal intensities would be
        # contradictory: require the upright 1..9 range.
        if not 1.0 <= intensity <= 9.0:
            raise ValidationError(
                f"intensity {intensity} must lie in [1, 9] "
                "(swap the items to express the inverse preference)",
                path=f"{entry_path}.intensity",
            )
        if more == less:
            raise ValidationError(
                f"{more!r} compared against itself", path=entry_path
            )
        triples.append((more, less, intensity))
    return triples


def _judgment_audit(
    matrix: ahp.ComparisonMatrix, count: int, subject: str
) -> list[str]:
    notes = [f"{subject} weights derived from {count} pairwise judgment(s)"]
    for a, b in matrix.defaulted_pairs:
        notes.append(
            f"no judgment for pair ({a!r}, {b!r}); defaulted to equal importance"
        )
    ratio = ahp.consistency_ratio(matrix)
    if ratio > ahp.CONSISTENCY_THRESHOLD:
        notes.append(
            f"{subject} judgment consistency ratio {ratio:.3f} exceeds "
            f"{ahp.CONSISTENCY_THRESHOLD}; review the judgments"
        )
    return notes


def _parse_criteria(raw, path: str, audit: list[str]) -> CriteriaWeights:
    criteria = _as_mapping(raw, path)
    if "judgment" in criteria:
        _check_keys(criteria, {"judgment"}, path)
        judgment = _as_mapping(criteria["judgment"], f"{path}.judgment")
        _check_keys(judgment, {"preferred", "intensity"}, f"{path}.judgment")
        for key in ("preferred", "intensity"):
            if key not in judgment:
                raise SchemaError(f"missing key {key!r}", path=f"{path}.judgment")
        preferred = _as_str(judgment["preferred"], f"{path}.judgment.preferred")
        if preferred not in ("cost", "performance"):
            raise ValidationError(
                f"preferred criterion must be 'cost' or 'performance', "
                f"got {preferred!r}",
                path=f"{path}.judgment.preferred",
            )
        intensity = _as_number(judgment["intensity"], f"{path}.judgment.intensity")
        if not 1.0 <= intensity <= 9.0:
            raise ValidationError(
                f"intensity {intensity} must lie in [1, 9]",
                path=f"{path}.judgment.intensity",
            )
        other = "performance" if preferred == "cost" else "cost"
        matrix = ahp.build_comparison_matrix(
            ("cost", "performance"), [(preferred, other, intensity)]
        )
        derived = ahp.derive_weights(matrix).as_mapping()
        audit.append(
            f"criteria weights derived from judgment ({preferred} over "
            f"{other}, intensity {intensity:g}): cost {derived['cost']!r}, "
            f"performance {derived['performance']!r}"
        )
        return CriteriaWeights(
            cost_weight=derived["cost"],
            performance_weight=derived["performance"],
        )
    _check_keys(criteria, {"cost_weight", "performance_weight"}, path)
    for key in ("cost_weight", "performance_weight"):
        if key not in criteria:
            raise SchemaError(f"missing key {key!r}", path=path)
    return CriteriaWeights(
        cost_weight=_as_number(criteria["cost_weight"], f"{path}.cost_weight"),
        performance_weight=_as_number(
            criteria["performance_weight"], f"{path}.performance_weight"
        ),
    )


# --------------------------------------------------------------------------
# problem documents

def load_problem(
    document: Mapping[str, Any],
    *,
    renormalize_weights: bool = False,
    confidence: float = DEFAULT_CONFIDENCE,
    ci_warn_threshold: float = DEFAULT_CI_WARN_THRESHOLD,
) -> tuple[DecisionProblem, list[str]]:
    """Validate a problem document and build the decision problem.

    Returns the problem (applications and architectures sorted by id)
    plus the audit list of every transformation and advisory that loading
    performed.  Rejections name the offending element and its path.
    """
    document = _as_mapping(document, "$")
    _check_keys(
        document,
        {
            "applications", "architectures", "measurements",
            "application_judgments", "criteria", "options",
        },
        "$",
    )
    for key in ("applications", "architectures", "measurements", "criteria"):
        if key not in document:
            raise SchemaError(f"missing key {key!r}", path="$")

    audit: list[str] = []

    if "options" in document:
        options = _as_mapping(document["options"], "$.options")
        _check_keys(options, {"renormalize_weights"}, "$.options")
        flag = options.get("renormalize_weights", False)
        if not isinstance(flag, bool):
            raise SchemaError(
                "expected a boolean", path="$.options.renormalize_weights"
            )
        renormalize_weights = renormalize_weights or flag

    # -- applications ------------------------------------------------------
    raw_applications = _as_list(document["applications"], "$.applications")
    if not raw_applications:
        raise ValidationError("at least one application is required",
                              path="$.applications")
    app_ids: list[str] = []
    explicit_weights: dict[str, float] = {}
    for i, raw in enumerate(raw_applications):
        path = f"$.applications[{i}]"
        entry = _as_mapping(raw, path)
        _check_keys(entry, {"id", "weight"}, path)
        if "id" not in entry:
            raise SchemaError("missing key 'id'", path=path)
        app_id = _as_str(entry["id"], f"{path}.id")
        if app_id in app_ids:
            raise ValidationError(f"duplicate application {app_id!r}", path=path)
        app_ids.append(app_id)
        if "weight" in entry:
            explicit_weights[app_id] = _as_number(
                entry["weight"], f"{path}.weight"
            )

    # -- architectures -----------------------------------------------------
    raw_architectures = _as_list(document["architectures"], "$.architectures")
    architectures: list[Architecture] = []
    for i, raw in enumerate(raw_architectures):
        path = f"$.architectures[{i}]"
        entry = _as_mapping(raw, path)
        _check_keys(entry, {"id", "cost", "currency"}, path)
        for key in ("id", "cost"):
            if key not in entry:
                raise SchemaError(f"missing key {key!r}", path=path)
        arch_id = _as_str(entry["id"], f"{path}.id")
        if any(k.id == arch_id for k in architectures):
            raise ValidationError(f"duplicate architecture {arch_id!r}", path=path)
        cost = _as_number(entry["cost"], f"{path}.cost")
        currency = "USD"
        if "currency" in entry:
            currency = _as_str(entry["currency"], f"{path}.currency")
        try:
            architectures.append(
                Architecture(id=arch_id, cost=cost, currency=currency)
            )
        except ValidationError as error:
            raise ValidationError(str(error), path=f"{path}.cost") from None
    if len(architectures) < 2:
        raise ValidationError(
            "a decision needs at least 2 architectures", path="$.architectures"
        )

    # -- measurements --------------------------------------------------------
    arch_ids = [k.id for k in architectures]
    times: dict[tuple[str, str], float] = {}
    raw_measurements = _as_list(document["measurements"], "$.measurements")
    for i, raw in enumerate(raw_measurements):
        path = f"$.measurements[{i}]"
        entry = _as_mapping(raw, path)
        _check_keys(
            entry, {"application", "architecture", "unit", "runs", "mean"}, path
        )
        for key in ("application", "architecture", "unit"):
            if key not in entry:
                raise SchemaError(f"missing key {key!r}", path=path)
        app = _as_str(entry["application"], f"{path}.application")
        arch = _as_str(entry["architecture"], f"{path}.architecture")
        if app not in app_ids:
            raise ValidationError(f"unknown application {app!r}",
                                  path=f"{path}.application")
        if arch not in arch_ids:
            raise ValidationError(f"unknown architecture {arch!r}",
                                  path=f"{path}.architecture")
        unit = _as_str(entry["unit"], f"{path}.unit")
        if unit != "seconds":
            raise ValidationError(
                f"times must be given in 'seconds', got {unit!r}",
                path=f"{path}.unit",
            )
        if ("runs" in entry) == ("mean" in entry):
            raise ValidationError(
                f"t({app!r}, {arch!r}) needs exactly one of 'runs' or 'mean'",
                path=path,
            )
        if (app, arch) in times:
            raise ValidationError(
                f"t({app!r}, {arch!r}) measured more than once", path=path
            )
        if "mean" in entry:
            mean = _as_number(entry["mean"], f"{path}.mean")
            if not math.isfinite(mean) or mean <= 0.0:
                raise ValidationError(
                    f"t({app!r}, {arch!r}) must be a positive finite number, "
                    f"got {mean!r}",
                    path=f"{path}.mean",
                )
            times[(app, arch)] = mean
        else:
            samples = tuple(
                _as_number(v, f"{path}.runs[{j}]")
                for j, v in enumerate(_as_list(entry["runs"], f"{path}.runs"))
            )
            runs = RunSet(application=app, architecture=arch, samples=samples)
            with _warnings.catch_warnings(record=True) as caught:
                _warnings.simplefilter("always")
                summary = aggregate_runs(
                    runs,
                    confidence=confidence,
                    warn_threshold=ci_warn_threshold,
                )
            audit.append(
                f"t({app!r}, {arch!r}): aggregated {summary.count} run(s) "
                f"to mean {summary.mean!r} s"
            )
            audit.extend(str(w.message) for w in caught)
            times[(app, arch)] = summary.mean

    # -- application weights -------------------------------------------------
    has_judgments = "application_judgments" in document
    if explicit_weights and has_judgments:
        raise ValidationError(
            "application weights given both explicitly and as judgments; "
            "provide exactly one source",
            path="$.application_judgments",
        )
    if explicit_weights and len(explicit_weights) != len(app_ids):
        missing = sorted(set(app_ids) - set(explicit_weights))
        raise ValidationError(
            f"either every application carries a weight or none; "
            f"missing {missing}",
            path="$.applications",
        )

    if has_judgments:
        triples = _parse_judgments(
            document["application_judgments"], "$.application_judgments"
        )
        for more, less, _ in triples:
            for item in (more, less):
                if item not in app_ids:
                    raise ValidationError(
                        f"judgment references unknown application {item!r}",
                        path="$.application_judgments",
                    )
        try:
            matrix = ahp.build_comparison_matrix(app_ids, triples)
        except ValidationError as error:
            raise ValidationError(str(error), path="$.application_judgments") from None
        weights = ahp.derive_weights(matrix).as_mapping()
        audit.extend(_judgment_audit(matrix, len(triples), "application"))
    elif explicit_weights:
        total = sum(explicit_weights.values())
        for app_id, weight in explicit_weights.items():
            if not math.isfinite(weight) or weight <= 0.0:
                raise ValidationError(
                    f"application {app_id!r}: weight must be positive",
                    path="$.applications",
                )
        if abs(total - 1.0) > 1e-9:
            if not renormalize_weights:
                raise ValidationError(
                    f"application weights sum to {total!r}, not 1; set "
                    "options.renormalize_weights to rescale proportionally",
                    path="$.applications",
                )
            weights = {a: w / total for a, w in explicit_weights.items()}
            audit.append(
                f"application weights renormalized proportionally from "
                f"sum {total!r} to 1"
            )
        else:
            weights = dict(explicit_weights)
    elif len(app_ids) == 1:
        weights = {app_ids[0]: 1.0}
        audit.append(
            f"single application {app_ids[0]!r} assigned weight 1.0 "
            "(no weight source given)"
        )
    else:
        raise ValidationError(
            "application weights missing: give explicit weights or an "
            "'application_judgments' block",
            path="$.applications",
        )

    # -- criteria ------------------------------------------------------------
    if "criteria" not in document:
        raise SchemaError("missing key 'criteria'", path="$")
    criteria = _parse_criteria(document["criteria"], "$.criteria", audit)

    # -- assemble (canonical ordering: sorted by id) --------------------------
    applications = tuple(
        Application(id=a, weight=weights[a]) for a in sorted(app_ids)
    )
    architectures_sorted = tuple(sorted(architectures, key=lambda k: k.id))
    matrix = TimeMatrix.from_entries(
        [a.id for a in applications],
        [k.id for k in architectures_sorted],
        times,
    )
    problem = DecisionProblem(
        applications=applications,
        architectures=architectures_sorted,
        times=matrix,
        criteria=criteria,
    )
    return problem, audit


def load_problem_file(path, **kwargs) -> tuple[DecisionProblem, list[str]]:
    """Read a problem document from a JSON file; see :func:`load_problem`."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        document = json.loads(text)
    except json.JSONDecodeError as error:
        raise SchemaError(f"not valid JSON: {error}", path=str(path)) from None
    return load_problem(document, **kwargs)


def problem_to_document(problem: DecisionProblem) -> dict:
    """Serialize a problem to its canonical document (ids sorted).

    Loading the result yields a problem equal to serializing-and-loading
    again; aggregated run lists are not preserved, only their means.
    """
    app_order = sorted(range(len(problem.applications)),
                       key=lambda i: problem.applications[i].id)
    arch_order = sorted(range(len(problem.architectures)),
                        key=lambda i: problem.architectures[i].id)
    return {
        "applications": [
            {
                "id": problem.applications[i].id,
                "weight": problem.applications[i].weight,
            }
            for i in app_order
        ],
        "architectures": [
            {
                "id": problem.architectures[i].id,
                "cost": problem.architectures[i].cost,
                "currency": problem.architectures[i].currency,
            }
            for i in arch_order
        ],
        "measurements": [
            {
                "application": problem.applications[i].id,
                "architecture": problem.architectures[k].id,
                "unit": "seconds",
                "mean": problem.times.seconds[i][k],
            }
            for i in app_order
            for k in arch_order
        ],
        "criteria": {
            "cost_weight": problem.criteria.cost_weight,
            "performance_weight": problem.criteria.performance_weight,
        },
    }


# --------------------------------------------------------------------------
# standalone judgment documents (for weight derivation without a problem)

def parse_weights_document(document: Mapping[str, Any]) -> ahp.ComparisonMatrix:
    """Parse ``{"items": [...], "judgments": [...]}`` into a matrix."""
    document = _as_mapping(document, "$")
    _check_keys(document, {"items", "judgments"}, "$")
    for key in ("items", "judgments"):
        if key not in document:
            raise SchemaError(f"missing key {key!r}", path="$")
    items = [
        _as_str(v, f"$.items[{i}]")
        for i, v in enumerate(_as_list(document["items"], "$.items"))
    ]
    triples = _parse_judgments(document["judgments"], "$.judgments")
    for more, less, _ in triples:
        for item in (more, less):
            if item not in items:
                raise ValidationError(
                    f"judgment references unknown item {item!r}",
                    path="$.judgments",
                )
    try:
        return ahp.build_comparison_matrix(items, triples)
    except ValidationError as error:
        raise ValidationError(str(error), path="$.judgments") from None


# --------------------------------------------------------------------------
# scenario documents

def load_scenarios(
    document: Mapping[str, Any], problem: DecisionProblem
) -> tuple[Scenario, ...]:
    """Parse ``{"scenarios": [...]}`` against an already-loaded problem."""
    document = _as_mapping(document, "$")
    _check_keys(document, {"scenarios"}, "$")
    if "scenarios" not in document:
        raise SchemaError("missing key 'scenarios'", path="$")
    scenarios = []
    for i, raw in enumerate(_as_list(document["scenarios"], "$.scenarios")):
        path = f"$.scenarios[{i}]"
        entry = _as_mapping(raw, path)
        _check_keys(entry, {"label", "application_weights", "criteria"}, path)
        for key in ("label", "application_weights", "criteria"):
            if key not in entry:
                raise SchemaError(f"missing key {key!r}", path=path)
        label = _as_str(entry["label"], f"{path}.label")
        raw_weights = _as_mapping(
            entry["application_weights"], f"{path}.application_weights"
        )
        expected = set(problem.application_ids)
        if set(raw_weights) != expected:
            raise ValidationError(
                f"weights must cover the problem's applications "
                f"{sorted(expected)} exactly",
                path=f"{path}.application_weights",
            )
        try:
            vector = ahp.WeightVector(
                labels=problem.application_ids,
                weights=tuple(
                    _as_number(
                        raw_weights[a], f"{path}.application_weights.{a}"
                    )
                    for a in problem.application_ids
                ),
            )
        except ValidationError as error:
            raise ValidationError(
                str(error), path=f"{path}.application_weights"
            ) from None
        audit: list[str] = []
        criteria = _parse_criteria(entry["criteria"], f"{path}.criteria", audit)
        scenarios.append(
            Scenario(label=label, application_weights=vector, criteria=criteria)
        )
    return tuple(scenarios)


# --------------------------------------------------------------------------
# CSV run import

def runs_from_csv(source: str | Path | io.TextIOBase) -> list[dict]:
    """Read raw run samples from CSV into measurement entries.

    Expects the exact header ``application,architecture,seconds`` with one
    sample per row.  Rows are grouped per pair (first-appearance order)
    into ``{"application", "architecture", "unit", "runs"}`` entries ready
    to drop into a problem document.
    """
    if isinstance(source, io.TextIOBase):
        handle = source
        text = handle.read()
    else:
        text = Path(source).read_text(encoding="utf-8")
    reader = csv.reader(io.StringIO(text))
    try:
        header = tuple(next(reader))
    except StopIteration:
        raise SchemaError("empty CSV", path="csv") from None
    if header != CSV_HEADER:
        raise SchemaError(
            f"expected header {','.join(CSV_HEADER)!r}, got {','.join(header)!r}",
            path="csv:1",
        )
    grouped: dict[tuple[str, str], list[float]] = {}
    for line, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != 3:
            raise SchemaError("expected 3 columns", path=f"csv:{line}")
        app, arch, raw = row
        try:
            seconds = float(raw)
        except ValueError:
            raise SchemaError(
                f"seconds value {raw!r} is not a number", path=f"csv:{line}"
            ) from None
        if not math.isfinite(seconds) or seconds <= 0.0:
            raise ValidationError(
                f"seconds value {seconds!r} must be positive and finite",
                path=f"csv:{line}",
            )
        grouped.setdefault((app, arch), []).append(seconds)
    return [
        {
            "application": app,
            "architecture": arch,
            "unit": "seconds",
            "runs": samples,
        }
        for (app, arch), samples in grouped.items()
    ]
