"""What-if analysis: scenario tables, weight sweeps, winner crossovers.

Because every gain is affine in the cost weight, the exact points where
the recommendation flips can be solved in closed form instead of being
hunted with a slider.
"""

from archgain import (
    CriteriaWeights,
    Scenario,
    WeightVector,
    application_weight_sweep,
    criteria_weight_crossovers,
    evaluate,
    load_problem,
    scenario_table,
)

problem, _ = load_problem({
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
})

# -- a scenario table: one full evaluation per column ----------------------
even = CriteriaWeights(cost_weight=0.5, performance_weight=0.5)
scenarios = [
    Scenario("equal", WeightVector(("btree", "lud"), (0.5, 0.5)), even),
    Scenario("lud-heavy", WeightVector(("btree", "lud"), (0.1, 0.9)), even),
    Scenario("btree-heavy", WeightVector(("btree", "lud"), (0.9, 0.1)), even),
]
print("scenario           gains                                winner")
for row in scenario_table(problem, scenarios):
    gains = "  ".join(f"{g:.5f}" for g in row.gains)
    print(f"{row.label:<18} {gains}   {row.winner}")

# -- sweeping one application's weight -------------------------------------
print("\nsweep of w_lud (others rescaled proportionally):")
for row in application_weight_sweep(problem, "lud", (0.0, 0.25, 0.5, 0.75, 1.0)):
    print(f"  w_lud={row.value:>4}: winner {row.winner}")

# -- where exactly does the winner flip as cost gets more important? -------
scan = criteria_weight_crossovers(problem)
print("\nwinner by cost weight:")
for interval in scan.intervals:
    print(f"  w_c in [{interval.low:.6f}, {interval.high:.6f}] -> {interval.winner}")
if not scan.points:
    print("  (no crossover: the same architecture wins at every mix)")

# A problem where the winner does flip: one fast-but-dear machine against
# one slow-but-cheap machine.
toy, _ = load_problem({
    "applications": [{"id": "stream", "weight": 1.0}],
    "architectures": [{"id": "cheap", "cost": 100}, {"id": "fast", "cost": 200}],
    "measurements": [
        {"application": "stream", "architecture": "cheap", "unit": "seconds", "mean": 200},
        {"application": "stream", "architecture": "fast", "unit": "seconds", "mean": 100},
    ],
    "criteria": {"cost_weight": 0.5, "performance_weight": 0.5},
})
for point in criteria_weight_crossovers(toy).points:
    print(
        f"\ntoy problem: {point.winner_below} wins below "
        f"w_c={point.at_cost_weight:.3f}, {point.winner_above} above"
    )
    report = evaluate(
        toy,
        criteria=CriteriaWeights(
            cost_weight=point.at_cost_weight,
            performance_weight=1.0 - point.at_cost_weight,
        ),
    )
    print("gains at the flip point:", dict(zip(report.architecture_ids, report.gains)))
