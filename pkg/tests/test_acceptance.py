"""Acceptance suite: the published worked examples and the engine's
numerical contracts, each criterion as one test printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one line per
criterion.
"""

import dataclasses
import json
from fractions import Fraction

import numpy as np
import pytest
from fastapi.testclient import TestClient

from archgain import (
    ComparisonMatrix,
    CriteriaWeights,
    ValidationError,
    breakeven_cost,
    build_comparison_matrix,
    criteria_weight_crossovers,
    derive_weights,
    evaluate,
    load_problem,
    load_scenarios,
    normalize_times,
    scenario_table,
    TimeMatrix,
)
from archgain.cli import main as cli_main
from archgain.service import create_app
from conftest import fixture_doc, fixture_path, make_problem
from oracles import (
    bisect_breakeven,
    brute_force_gains,
    check_intervals_against_grid,
    with_cost,
    winning_margin,
)

SEED = 20260810


def ok(message):
    print(f"ACCEPTANCE PASS: {message}", flush=True)


def random_problem(rng, min_apps=1, strict_criteria=False):
    n = int(rng.integers(min_apps, 6))
    m = int(rng.integers(2, 6))
    raw = rng.uniform(0.1, 1.0, n)
    weights = raw / raw.sum()
    costs = rng.uniform(50.0, 20000.0, m)
    times = rng.uniform(1.0, 50000.0, (n, m))
    cost_weight = (
        float(rng.uniform(0.05, 0.95))
        if strict_criteria
        else float(rng.uniform(0.0, 1.0))
    )
    return make_problem(weights, costs, times, cost_weight)


def test_criterion_1_two_criteria_weights_are_exact():
    matrix = build_comparison_matrix(
        ("cost", "performance"), [("performance", "cost", 7)]
    )
    vector = derive_weights(matrix)
    assert vector.weights == (0.125, 0.875)
    ok("criterion 1 — 2x2 judgment yields exactly (0.125, 0.875)")


def test_criterion_2_application_weights_match_published_table():
    matrix = build_comparison_matrix(
        ("blast", "mum", "kmeans"),
        [("blast", "mum", 9), ("blast", "kmeans", 9), ("mum", "kmeans", 3)],
    )
    weights = derive_weights(matrix).as_mapping()
    assert weights["blast"] == pytest.approx(0.794, abs=1e-3)
    assert weights["kmeans"] == pytest.approx(0.067, abs=1e-3)
    assert weights["mum"] == pytest.approx(0.140, abs=1e-3)
    ok("criterion 2 — bioinformatics judgments give (0.794, 0.067, 0.140) ± 0.001")


def test_criterion_3_time_normalization_and_detected_typo():
    btree = normalize_times(
        TimeMatrix(("Btree",), ("A", "B", "C"), ((2489.0, 813.0, 1137.0),))
    )[0]
    assert btree == pytest.approx((0.15998, 0.48979, 0.35022), abs=1e-5)

    lud = normalize_times(
        TimeMatrix(("lud",), ("A", "B", "C"), ((347.0, 340.0, 180.0),))
    )[0]
    assert lud[0] == pytest.approx(0.25327, abs=1e-5)
    assert lud[2] == pytest.approx(0.48825, abs=1e-5)
    # the published middle value is 0.25714; the formula gives 0.25848 and
    # only the latter satisfies the row-sum invariant
    assert lud[1] == pytest.approx(0.25848, abs=1e-5)
    assert abs(lud[1] - 0.25714) > 1e-3
    assert 0.25327 + 0.25714 + 0.48825 == pytest.approx(0.99866, abs=1e-9)
    assert lud.sum() == pytest.approx(1.0, abs=1e-12)
    ok("criterion 3 — share rows reproduce published values; typo detected "
       "by the row-sum invariant")


PUBLISHED_SCENARIO_GAINS = {
    "equal":       {"A": 0.26314, "B": 0.34911, "C": 0.38742},
    "lud-heavy":   {"A": 0.28179, "B": 0.30258, "C": 0.41502},
    "btree-heavy": {"A": 0.24448, "B": 0.39564, "C": 0.35981},
    "cost-heavy":  {"A": 0.28574, "B": 0.33937, "C": 0.37469},
    "perf-heavy":  {"A": 0.24053, "B": 0.35885, "C": 0.40015},
}
TIGHT_SCENARIOS = ("equal", "lud-heavy", "cost-heavy", "perf-heavy")


def test_criterion_4_scenario_columns_reproduce_published_gains():
    problem, _ = load_problem(fixture_doc("btree_lud.json"))
    scenarios = load_scenarios(fixture_doc("scenarios_btree_lud.json"), problem)
    rows = scenario_table(problem, scenarios)

    assert [row.winner for row in rows] == ["C", "C", "B", "C", "C"]
    for row in rows:
        published = PUBLISHED_SCENARIO_GAINS[row.label]
        gains = dict(zip(problem.architecture_ids, row.gains))
        for arch, value in published.items():
            assert gains[arch] == pytest.approx(value, abs=2e-3), (
                f"{row.label}: Gain({arch})"
            )
        if row.label in TIGHT_SCENARIOS:
            assert gains["A"] == pytest.approx(published["A"], abs=5e-5)
            assert gains["C"] == pytest.approx(published["C"], abs=5e-5)
    ok("criterion 4 — all five what-if columns within 2e-3 "
       "(A and C within 5e-5), winners (C, C, B, C, C)")


def test_criterion_5_bioinformatics_case_reproduced():
    problem, _ = load_problem(fixture_doc("bioinfo.json"))
    report = evaluate(problem)
    assert report.gain_of("A") == pytest.approx(0.5782, abs=5e-4)
    assert report.gain_of("B") == pytest.approx(0.4223, abs=5e-4)
    assert report.winner == "A"

    with pytest.raises(ValidationError):
        load_problem(fixture_doc("bioinfo_literal.json"))
    literal, _ = load_problem(
        fixture_doc("bioinfo_literal.json"), renormalize_weights=True
    )
    literal_report = evaluate(literal)
    assert literal_report.gain_of("A") == pytest.approx(0.5190, abs=5e-3)
    assert literal_report.gain_of("B") == pytest.approx(0.4760, abs=5e-3)
    assert literal_report.winner == "A"
    ok("criterion 5 — bioinformatics gains (0.5782, 0.4223) ± 5e-4 with "
       "judged weights; literal 0.333 rejected unless renormalized, winner A")


def test_criterion_6_property_suite_over_1000_random_instances():
    rng = np.random.default_rng(SEED)
    for _ in range(1000):
        problem = random_problem(rng, strict_criteria=True)
        n = len(problem.applications)
        m = len(problem.architectures)
        report = evaluate(problem)
        gains = np.array(report.gains)

        assert abs(gains.sum() - 1.0) <= 1e-9
        assert np.max(np.abs(gains - brute_force_gains(problem))) <= 1e-12

        scale = float(rng.uniform(0.25, 4.0))
        j = int(rng.integers(0, n))
        scaled_rows = tuple(
            tuple(t * scale for t in row) if idx == j else row
            for idx, row in enumerate(problem.times.seconds)
        )
        scaled_times = dataclasses.replace(
            problem, times=dataclasses.replace(problem.times, seconds=scaled_rows)
        )
        assert np.max(np.abs(np.array(evaluate(scaled_times).gains) - gains)) <= 1e-12

        scaled_costs = dataclasses.replace(
            problem,
            architectures=tuple(
                dataclasses.replace(k, cost=k.cost * scale)
                for k in problem.architectures
            ),
        )
        assert np.max(np.abs(np.array(evaluate(scaled_costs).gains) - gains)) <= 1e-12

        k = int(rng.integers(0, m))
        faster_rows = tuple(
            tuple(t / 2 if col == k else t for col, t in enumerate(row))
            if idx == j else row
            for idx, row in enumerate(problem.times.seconds)
        )
        faster = dataclasses.replace(
            problem, times=dataclasses.replace(problem.times, seconds=faster_rows)
        )
        faster_gains = evaluate(faster).gains
        assert faster_gains[k] > gains[k]
        assert all(
            faster_gains[p] <= gains[p] + 1e-15 for p in range(m) if p != k
        )

        dearer = dataclasses.replace(
            problem,
            architectures=tuple(
                dataclasses.replace(a, cost=a.cost * 2) if col == k else a
                for col, a in enumerate(problem.architectures)
            ),
        )
        dearer_gains = evaluate(dearer).gains
        assert dearer_gains[k] < gains[k]
        assert all(
            dearer_gains[p] >= gains[p] - 1e-15 for p in range(m) if p != k
        )

        size = int(rng.integers(2, 6))
        raw = rng.uniform(1.0, 9.0, size)
        target = raw / raw.sum()
        fractions = [Fraction(float(w)) for w in target]
        consistent = ComparisonMatrix(
            tuple(f"i{idx}" for idx in range(size)),
            tuple(tuple(a / b for b in fractions) for a in fractions),
        )
        recovered = derive_weights(consistent).weights
        assert np.max(np.abs(np.array(recovered) - target)) <= 1e-9
    ok("criterion 6 — 1000 random instances: normalization, decomposition, "
       "scale invariance, monotonicity, consistent-matrix recovery")


def test_criterion_7_sensitivity_closed_forms_match_oracles():
    rng = np.random.default_rng(SEED + 1)

    for name in ("btree_lud.json", "crossover_toy.json"):
        problem, _ = load_problem(fixture_doc(name))
        scan = criteria_weight_crossovers(problem)
        check_intervals_against_grid(problem, scan, step=1e-6, rng=rng)
    for _ in range(30):
        problem = random_problem(rng)
        scan = criteria_weight_crossovers(problem)
        check_intervals_against_grid(problem, scan, step=1e-6)

    bounded = 0
    for _ in range(200):
        problem = random_problem(rng, strict_criteria=True)
        architecture = problem.architecture_ids[
            int(rng.integers(0, len(problem.architectures)))
        ]
        result = breakeven_cost(problem, architecture)
        status, cost = bisect_breakeven(problem, architecture)
        assert result.status == status
        if status != "bounded":
            continue
        bounded += 1
        assert result.max_cost == pytest.approx(cost, rel=1e-6)
        assert winning_margin(problem, architecture, 0.99 * result.max_cost) >= -1e-12
        assert winning_margin(problem, architecture, 1.01 * result.max_cost) < 0.0
    assert bounded >= 150  # the sweepable regime dominates random instances
    ok(f"criterion 7 — crossovers agree with 1e-6 grid scans; break-even "
       f"matches bisection and brackets on {bounded} bounded instances")


def test_criterion_8_cli_and_service_agree_byte_for_byte(capsys):
    client = TestClient(create_app(), raise_server_exceptions=False)
    fixtures = (
        "btree_lud.json",
        "bioinfo.json",
        "bioinfo_literal_renorm.json",
        "crossover_toy.json",
        "twin_times.json",
        "twin_full.json",
    )
    for name in fixtures:
        code = cli_main(
            ["evaluate", str(fixture_path(name)), "--format", "json", "--quiet"]
        )
        assert code == 0
        stdout = capsys.readouterr().out
        response = client.post("/api/evaluate", json=fixture_doc(name))
        assert response.status_code == 200
        assert response.content == stdout.encode("utf-8"), name
    ok("criterion 8 — evaluate output is byte-identical between CLI and service")
