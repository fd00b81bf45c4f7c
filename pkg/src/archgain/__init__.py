"""archgain: rank compute architectures for a shared application mix.

Measured execution times, acquisition costs, and pairwise-judgment
weights combine into one gain value per candidate architecture; the
package also answers what-if questions (weight sweeps, ranking
crossovers, break-even costs) about that ranking.
"""

__version__ = "0.1.0"

from .ahp import (
    ComparisonMatrix,
    WeightVector,
    build_comparison_matrix,
    consistency_ratio,
    derive_weights,
)
from .errors import InputError, SchemaError, ValidationError
from .gain import (
    Application,
    Architecture,
    CriteriaWeights,
    DecisionProblem,
    GainReport,
    NormalizedScores,
    TimeMatrix,
    evaluate,
    normalize_costs,
    normalize_times,
    per_application_gain,
    scores_for,
    select,
)
from .ingest import (
    MeasurementSummary,
    PrecisionWarning,
    RunSet,
    aggregate_runs,
    load_problem,
    load_problem_file,
    load_scenarios,
    parse_weights_document,
    problem_to_document,
    runs_from_csv,
)
from .sensitivity import (
    BreakEvenResult,
    CrossoverPoint,
    CrossoverScan,
    Scenario,
    ScenarioRow,
    SweepRow,
    WinnerInterval,
    application_weight_sweep,
    breakeven_cost,
    criteria_weight_crossovers,
    scenario_table,
)

__all__ = [
    "__version__",
    "Application",
    "Architecture",
    "BreakEvenResult",
    "ComparisonMatrix",
    "CriteriaWeights",
    "CrossoverPoint",
    "CrossoverScan",
    "DecisionProblem",
    "GainReport",
    "InputError",
    "MeasurementSummary",
    "NormalizedScores",
    "PrecisionWarning",
    "RunSet",
    "Scenario",
    "ScenarioRow",
    "SchemaError",
    "SweepRow",
    "TimeMatrix",
    "ValidationError",
    "WeightVector",
    "WinnerInterval",
    "aggregate_runs",
    "application_weight_sweep",
    "breakeven_cost",
    "build_comparison_matrix",
    "consistency_ratio",
    "criteria_weight_crossovers",
    "derive_weights",
    "evaluate",
    "load_problem",
    "load_problem_file",
    "load_scenarios",
    "normalize_costs",
    "normalize_times",
    "parse_weights_document",
    "per_application_gain",
    "problem_to_document",
    "runs_from_csv",
    "scenario_table",
    "scores_for",
    "select",
]
