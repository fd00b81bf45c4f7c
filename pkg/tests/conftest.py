import json
from pathlib import Path

import pytest

from archgain import (
    Application,
    Architecture,
    CriteriaWeights,
    DecisionProblem,
    TimeMatrix,
    load_problem,
)

FIXTURES = Path(__file__).parent / "fixtures"


def make_problem(weights, costs, times, cost_weight, app_ids=None, arch_ids=None):
    """Assemble a DecisionProblem from plain sequences (tests only)."""
    n, m = len(weights), len(costs)
    app_ids = tuple(app_ids) if app_ids else tuple(f"app{j}" for j in range(n))
    arch_ids = tuple(arch_ids) if arch_ids else tuple(f"arch{k}" for k in range(m))
    return DecisionProblem(
        applications=tuple(
            Application(id=a, weight=w) for a, w in zip(app_ids, weights)
        ),
        architectures=tuple(
            Architecture(id=k, cost=c) for k, c in zip(arch_ids, costs)
        ),
        times=TimeMatrix(
            application_ids=app_ids,
            architecture_ids=arch_ids,
            seconds=tuple(tuple(float(t) for t in row) for row in times),
        ),
        criteria=CriteriaWeights(
            cost_weight=cost_weight, performance_weight=1.0 - cost_weight
        ),
    )


def fixture_path(name: str) -> Path:
    return FIXTURES / name


def fixture_doc(name: str) -> dict:
    return json.loads(fixture_path(name).read_text(encoding="utf-8"))


@pytest.fixture
def btree_lud_problem():
    problem, _ = load_problem(fixture_doc("btree_lud.json"))
    return problem


@pytest.fixture
def bioinfo_problem():
    problem, _ = load_problem(fixture_doc("bioinfo.json"))
    return problem


@pytest.fixture
def crossover_toy_problem():
    problem, _ = load_problem(fixture_doc("crossover_toy.json"))
    return problem


@pytest.fixture
def twin_times_problem():
    problem, _ = load_problem(fixture_doc("twin_times.json"))
    return problem


@pytest.fixture
def twin_full_problem():
    problem, _ = load_problem(fixture_doc("twin_full.json"))
    return problem
