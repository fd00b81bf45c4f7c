"""Treat one architecture's cost as the unknown: break-even pricing.

"The GPU machine wins at its quoted price -- but how much could the
vendor raise the quote before it stops winning?"  Holding everything
else fixed, the gain tie against each competitor solves in closed form,
and the binding competitor is the one demanding the lowest ceiling.
"""

from archgain import breakeven_cost, evaluate, load_problem

doc = {
    "applications": [{"id": "btree", "weight": 0.5}, {"id": "lud", "weight": 0.5}],
    "architectures": [
        {"id": "A", "cost": 8900},
        {"id": "B", "cost": 8760},
        {"id": "C", "cost": 8000},
    ],
    "measurements": [
        {"application": "btree", "architecture": "A", "unit": "seconds", "mean": 2489},
        {"application": "btree", "architecture": "B", "unit": "seconds", "mean": 813},
        {"application": "btree", "architecture": "C", "unit": "seconds", "mean": 1137},
        {"application": "lud", "architecture": "A", "unit": "seconds", "mean": 347},
        {"application": "lud", "architecture": "B", "unit": "seconds", "mean": 340},
        {"application": "lud", "architecture": "C", "unit": "seconds", "mean": 180},
    ],
    "criteria": {"cost_weight": 0.5, "performance_weight": 0.5},
}
problem, _ = load_problem(doc)

result = breakeven_cost(problem, "C")
print(
    f"C wins at its quoted 8000 and keeps winning up to "
    f"{result.max_cost:.2f} {problem.currency}"
)
print(f"the binding competitor is {result.binding_competitor}")

# The same question for a machine that is currently losing answers
# "what would its price need to drop to?":
losing = breakeven_cost(problem, "A")
print(
    f"\nA (quoted 8900) would need to cost at most {losing.max_cost:.2f} "
    f"to match the top gain"
)

# Sanity-check by re-pricing the problem at the threshold: the gains tie.
repriced = dict(doc, architectures=[
    {"id": "A", "cost": 8900},
    {"id": "B", "cost": 8760},
    {"id": "C", "cost": result.max_cost},
])
report = evaluate(load_problem(repriced)[0])
print("\ngains with C re-priced at the threshold:")
for arch, gain in zip(report.architecture_ids, report.gains):
    print(f"  {arch}: {gain:.9f}")

# When cost carries no weight at all, no price can change the ranking.
perf_only = dict(doc, criteria={"cost_weight": 0.0, "performance_weight": 1.0})
print("\nwith cost weight 0:", breakeven_cost(load_problem(perf_only)[0], "C"))
