"""Rank three candidate architectures that must share two workloads.

Measured averages: a memory-bound tree search (fastest on B) and a
compute-bound dense solver (fastest on the GPU machine C).  Costs are
close.  Which box should the lab buy?

The gain of architecture k mixes two normalized shares:

    G(k) = w_d * sum_j w_j * D(j, k) + w_c * C[k]

where C[k] is the normalized reciprocal cost and D(j, k) the normalized
reciprocal execution time of application j.
"""

import numpy as np

from archgain import (
    Application,
    Architecture,
    CriteriaWeights,
    DecisionProblem,
    TimeMatrix,
    evaluate,
)

problem = DecisionProblem(
    applications=(
        Application("btree", weight=0.5),
        Application("lud", weight=0.5),
    ),
    architectures=(
        Architecture("A", cost=8900),   # 64-core x86
        Architecture("B", cost=8760),   # 32-core x86
        Architecture("C", cost=8000),   # manycore GPU
    ),
    times=TimeMatrix(
        application_ids=("btree", "lud"),
        architecture_ids=("A", "B", "C"),
        seconds=(
            (2489.0, 813.0, 1137.0),
            (347.0, 340.0, 180.0),
        ),
    ),
    criteria=CriteriaWeights(cost_weight=0.5, performance_weight=0.5),
)

report = evaluate(problem)

print("cost shares:   ", np.round(report.scores.cost_share, 5))
print("time shares:")
for app, row in zip(report.application_ids, report.scores.perf_share):
    print(f"  {app:<8}", np.round(row, 5))

print("\ngains:")
for arch, gain in zip(report.architecture_ids, report.gains):
    print(f"  {arch}: {gain:.5f}")
print("ranking:", " > ".join(report.ranking))
print("winner:", report.winner)

# Neither raw performance nor raw cost alone points at C for both
# workloads; the aggregate does.  Shift the importance toward the tree
# search and the answer changes:
flipped = evaluate(problem, application_weights={"btree": 0.9, "lud": 0.1})
print("\nwith btree at weight 0.9 the winner becomes:", flipped.winner)
