"""Pairwise-comparison weighting.

Subjective "how much more important is X than Y" judgments on the
nine-point preference scale are collected into a positive reciprocal
matrix, and a weight vector is derived by normalizing each column to
sum 1 and averaging the rows.  Judgments are stored as exact rationals
(:class:`fractions.Fraction`) so reciprocity holds bit-exactly; floats
appear only in the derived weights.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import ValidationError

# Nine-point preference scale: 1 equal .. 9 extreme, reciprocals for the
# inverse direction.  Intermediate values (2, 4, 6, 8 and non-integers)
# are accepted anywhere inside the closed range.
MIN_INTENSITY = Fraction(1, 9)
MAX_INTENSITY = Fraction(9)

# Advisory coherence threshold: above this the judgments are considered
# too self-contradictory to trust without review (never a rejection).
CONSISTENCY_THRESHOLD = 0.1

# Random-index table for the consistency ratio, by matrix size.
RANDOM_INDEX = {
    1: 0.0, 2: 0.0, 3: 0.58, 4: 0.90, 5: 1.12,
    6: 1.24, 7: 1.32, 8: 1.41, 9: 1.45, 10: 1.49,
}


def validate_intensity(value) -> Fraction:
    """Coerce a judgment intensity to an exact rational in [1/9, 9]."""
    try:
        if isinstance(value, (Rational, int, str)):
            intensity = Fraction(value)
        elif isinstance(value, float):
            intensity = Fraction(value)
        else:
            raise TypeError
    except (TypeError, ValueError, ZeroDivisionError):
        raise ValidationError(f"intensity {value!r} is not a number")
    if not MIN_INTENSITY <= intensity <= MAX_INTENSITY:
        raise ValidationError(
            f"intensity {value} outside the preference scale [1/9, 9]"
        )
    return intensity


@dataclass(frozen=True)
class ComparisonMatrix:
    """Square positive reciprocal matrix of pairwise judgments.

    ``entries[i][j]`` is how many times more important ``labels[i]`` is
    than ``labels[j]``.  The diagonal is 1 and ``entries[j][i]`` is the
    exact reciprocal of ``entries[i][j]``.  ``defaulted_pairs`` records
    the unordered pairs that were never judged and fell back to 1.
    """

    labels: tuple[str, ...]
    entries: tuple[tuple[Fraction, ...], ...]
    defaulted_pairs: tuple[tuple[str, str], ...] = field(default=())

    def __post_init__(self):
        m = len(self.labels)
        if m < 2:
            raise ValidationError("a comparison needs at least 2 items")
        if len(set(self.labels)) != m:
            raise ValidationError("comparison labels must be distinct")
        if len(self.entries) != m or any(len(row) != m for row in self.entries):
            raise ValidationError(f"entries must form a {m}x{m} matrix")
        for i in range(m):
            if self.entries[i][i] != 1:
                raise ValidationError(
                    f"self-comparison of {self.labels[i]!r} must be 1"
                )
            for j in range(m):
                if i == j:
                    continue
                value = self.entries[i][j]
                if not MIN_INTENSITY <= value <= MAX_INTENSITY:
                    raise ValidationError(
                        f"entry ({self.labels[i]!r}, {self.labels[j]!r}) = "
                        f"{value} outside [1/9, 9]"
                    )
                if value * self.entries[j][i] != 1:
                    raise ValidationError(
                        f"entries ({self.labels[i]!r}, {self.labels[j]!r}) "
                        "are not exact reciprocals"
                    )

    @property
    def size(self) -> int:
        return len(self.labels)


def build_comparison_matrix(
    labels: Sequence[str],
    judgments: Iterable[tuple[str, str, object]],
) -> ComparisonMatrix:
    """Arrange judgments ``(a, b, intensity)`` into a comparison matrix.

    ``intensity`` says how many times more important ``a`` is than ``b``;
    the mirror cell gets the exact reciprocal.  Unjudged pairs default to
    1 (equal importance) and are listed in ``defaulted_pairs``.  A pair
    judged twice with conflicting values is rejected.
    """
    labels = tuple(labels)
    if len(set(labels)) != len(labels):
        raise ValidationError("labels must be distinct")
    if len(labels) < 2:
        raise ValidationError("a comparison needs at least 2 items")
    index = {label: i for i, label in enumerate(labels)}

    m = len(labels)
    cells: dict[tuple[int, int], Fraction] = {}
    for a, b, raw in judgments:
        if a not in index:
            raise ValidationError(f"judgment references unknown item {a!r}")
        if b not in index:
            raise ValidationError(f"judgment references unknown item {b!r}")
        if a == b:
            raise ValidationError(f"item {a!r} compared against itself")
        intensity = validate_intensity(raw)
        i, j = index[a], index[b]
        existing = cells.get((i, j))
        if existing is not None and existing != intensity:
            raise ValidationError(
                f"pair ({a!r}, {b!r}) judged twice with conflicting values "
                f"{existing} and {intensity}"
            )
        cells[(i, j)] = intensity
        cells[(j, i)] = 1 / intensity

    defaulted = tuple(
        (labels[i], labels[j])
        for i in range(m)
        for j in range(i + 1, m)
        if (i, j) not in cells
    )
    entries = tuple(
        tuple(
            Fraction(1) if i == j else cells.get((i, j), Fraction(1))
            for j in range(m)
        )
        for i in range(m)
    )
    return ComparisonMatrix(labels, entries, defaulted)


@dataclass(frozen=True)
class WeightVector:
    """Normalized weights, one per label: each in (0, 1), summing to 1."""

    labels: tuple[str, ...]
    weights: tuple[float, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.weights):
            raise ValidationError("labels and weights must have equal length")
        if len(set(self.labels)) != len(self.labels):
            raise ValidationError("weight labels must be distinct")
        if any(not 0.0 < w < 1.0 for w in self.weights):
            raise ValidationError("every weight must lie strictly in (0, 1)")
        if abs(sum(self.weights) - 1.0) > 1e-12:
            raise ValidationError("weights must sum to 1")

    def as_mapping(self) -> dict[str, float]:
        return dict(zip(self.labels, self.weights))


def derive_weights(matrix: ComparisonMatrix) -> WeightVector:
    """Column-normalize the matrix and average each row.

    Runs in exact rational arithmetic and converts to float at the end,
    so textbook cases come out bit-exact (the 2x2 intensity-7 matrix
    yields exactly 0.125 / 0.875).
    """
    m = matrix.size
    column_sums = [
        sum(matrix.entries[i][j] for i in range(m)) for j in range(m)
    ]
    averages = [
        sum(matrix.entries[i][j] / column_sums[j] for j in range(m)) / m
        for i in range(m)
    ]
    return WeightVector(matrix.labels, tuple(float(w) for w in averages))


def consistency_ratio(matrix: ComparisonMatrix) -> float:
    """Coherence diagnostic for a comparison matrix, >= 0.

    The dominant-eigenvalue estimate applies the matrix to the derived
    weight vector and averages the component-wise ratios; the ratio is
    that estimate's excess over the matrix size, scaled by the
    random-index table.  1x1 and 2x2 matrices are always consistent.
    Values above :data:`CONSISTENCY_THRESHOLD` deserve a warning, never
    a rejection.
    """
    m = matrix.size
    if m <= 2:
        return 0.0
    weights = derive_weights(matrix).weights
    rows = [[float(v) for v in row] for row in matrix.entries]
    lambda_max = sum(
        sum(rows[i][j] * weights[j] for j in range(m)) / weights[i]
        for i in range(m)
    ) / m
    consistency_index = (lambda_max - m) / (m - 1)
    random_index = RANDOM_INDEX.get(m, RANDOM_INDEX[10])
    return max(consistency_index, 0.0) / random_index


def advisories(matrix: ComparisonMatrix, ratio: float) -> list[str]:
    """Warning lines a front end should surface for this matrix."""
    notes = [
        f"no judgment for pair ({a!r}, {b!r}); defaulted to equal importance"
        for a, b in matrix.defaulted_pairs
    ]
    if ratio > CONSISTENCY_THRESHOLD:
        notes.append(
            f"consistency ratio {ratio:.3f} exceeds "
            f"{CONSISTENCY_THRESHOLD}; review the judgments"
        )
    return notes
