"""From raw benchmark runs to a reproducible problem document.

Each (application, architecture) point is measured repeatedly; the
loader aggregates runs to their mean, computes a Student-t confidence
interval, and complains when the interval is wider than 1% of the mean.
Every transformation lands in an audit list so nothing changes silently.
"""

import io
import json

from archgain import (
    RunSet,
    aggregate_runs,
    load_problem,
    problem_to_document,
    runs_from_csv,
)

# -- aggregate one run set directly ----------------------------------------
summary = aggregate_runs(RunSet("lud", "C", (179.0, 181.0, 180.5, 179.5)))
print("mean:", summary.mean, "stddev:", round(summary.stddev, 4))
print("95% half-width:", round(summary.ci95_halfwidth, 4),
      f"({summary.relative_halfwidth:.2%} of the mean)")

# -- raw samples can also arrive as CSV, one run per row --------------------
csv_text = io.StringIO(
    "application,architecture,seconds\n"
    "tree,small,101\ntree,small,99\ntree,small,100\n"
    "tree,big,61\ntree,big,59\ntree,big,60\n"
    "solver,small,240\nsolver,small,242\nsolver,small,238\n"
    "solver,big,190\nsolver,big,210\nsolver,big,200\n"
)
measurements = runs_from_csv(csv_text)
print("\nmeasurement entries from CSV:", len(measurements))

problem, audit = load_problem({
    "applications": [{"id": "tree"}, {"id": "solver"}],
    "architectures": [
        {"id": "small", "cost": 4000},
        {"id": "big", "cost": 9500},
    ],
    "measurements": measurements,
    "application_judgments": [
        {"more_important": "tree", "less_important": "solver", "intensity": 3},
    ],
    "criteria": {"judgment": {"preferred": "performance", "intensity": 3}},
})

print("\naudit trail:")
for line in audit:
    print("  -", line)
# the noisy solver/big runs (190, 210, 200) trip the 1% precision bar

print("\nweights:", dict(zip(problem.application_ids, problem.application_weights)))
print("criteria:", problem.criteria)

# -- the loaded problem serializes back to a canonical document -------------
document = problem_to_document(problem)
reloaded, _ = load_problem(document)
assert reloaded == problem
print("\ncanonical document round-trips; measurements now carry means:")
print(json.dumps(document["measurements"][0], indent=2))
