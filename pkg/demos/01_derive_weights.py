"""Turn verbal preference judgments into numerical weights.

A decision-maker rarely hands you a weight vector; they say things like
"BLAST matters far more than MUMmer".  The nine-point preference scale
maps such statements to numbers (1 equal, 3 moderate, 5 strong, 7 very
strong, 9 extreme), pairwise judgments form a reciprocal matrix, and
column-normalized row averages give the weights.
"""

from archgain import (
    build_comparison_matrix,
    consistency_ratio,
    derive_weights,
)

# Two criteria: performance is "very strongly" preferred over cost.
matrix = build_comparison_matrix(
    ("cost", "performance"),
    [("performance", "cost", 7)],
)
print("comparison matrix:")
for label, row in zip(matrix.labels, matrix.entries):
    print(f"  {label:<12}", [str(v) for v in row])

weights = derive_weights(matrix)
print("derived weights:", weights.as_mapping())
# -> cost 0.125, performance 0.875

# Three applications from a bioinformatics lab: BLAST dominates.
apps = build_comparison_matrix(
    ("blast", "mum", "kmeans"),
    [
        ("blast", "mum", 9),       # extreme preference
        ("blast", "kmeans", 9),
        ("mum", "kmeans", 3),      # moderate preference
    ],
)
print("\napplication weights:", derive_weights(apps).as_mapping())

# The consistency ratio flags self-contradictory judgment sets.  Values
# above 0.1 deserve a second look; they are never rejected outright.
print("consistency ratio:", round(consistency_ratio(apps), 4))

cycle = build_comparison_matrix(
    ("a", "b", "c"),
    [("a", "b", 9), ("b", "c", 9), ("c", "a", 9)],  # a > b > c > a ...
)
print("cyclic judgments ratio:", round(consistency_ratio(cycle), 4))
