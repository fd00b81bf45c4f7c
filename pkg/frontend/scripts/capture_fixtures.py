#!/usr/bin/env python3
"""Capture decision-service responses as test fixtures.

Starts the real HTTP service, replays the exact request documents the
workbench state layer produces, and stores {request, response} pairs
under tests/fixtures/.  Re-run after changing the engine:

    python3 scripts/capture_fixtures.py
"""

import json
import subprocess
import sys
import time
import urllib.error
import urllib.request
from pathlib import Path

PORT = 8713
BASE = f"http://127.0.0.1:{PORT}"
OUT = Path(__file__).parent.parent / "tests" / "fixtures"


def post(route: str, body: dict) -> dict:
    request = urllib.request.Request(
        f"{BASE}{route}",
        data=json.dumps(body).encode("utf-8"),
        headers={"content-type": "application/json; charset=utf-8"},
        method="POST",
    )
    with urllib.request.urlopen(request) as response:
        return json.loads(response.read().decode("utf-8"))


def wait_for_server(timeout: float = 15.0) -> None:
    deadline = time.monotonic() + timeout
    while time.monotonic() < deadline:
        try:
            with urllib.request.urlopen(f"{BASE}/api/health", timeout=1):
                return
        except (urllib.error.URLError, ConnectionError):
            time.sleep(0.2)
    raise RuntimeError("service did not come up")


def seconds(application, architecture, mean):
    return {
        "application": application,
        "architecture": architecture,
        "unit": "seconds",
        "mean": mean,
    }


def benchmark_problem(cost_weight: float) -> dict:
    # mirrors WorkbenchState.problemDocument() for the benchmark preset
    # (no judgments -> explicit equal weights)
    return {
        "applications": [
            {"id": "Btree", "weight": 0.5},
            {"id": "lud", "weight": 0.5},
        ],
        "architectures": [
            {"id": "A", "cost": 8900},
            {"id": "B", "cost": 8760},
            {"id": "C", "cost": 8000},
        ],
        "measurements": [
            seconds("Btree", "A", 2489),
            seconds("Btree", "B", 813),
            seconds("Btree", "C", 1137),
            seconds("lud", "A", 347),
            seconds("lud", "B", 340),
            seconds("lud", "C", 180),
        ],
        "criteria": {
            "cost_weight": cost_weight,
            "performance_weight": 1 - cost_weight,
        },
    }


def bioinformatics_problem(cost_weight: float = 0.5) -> dict:
    # mirrors the bioinformatics preset (judgment-driven weights)
    return {
        "applications": [{"id": "blast"}, {"id": "kmeans"}, {"id": "mum"}],
        "architectures": [
            {"id": "A", "cost": 8900},
            {"id": "B", "cost": 8760},
        ],
        "measurements": [
            seconds("blast", "A", 79341),
            seconds("blast", "B", 193515),
            seconds("kmeans", "A", 143),
            seconds("kmeans", "B", 121),
            seconds("mum", "A", 42),
            seconds("mum", "B", 38),
        ],
        # pair order matches JudgmentGrid.toDocument() (item-index order)
        "application_judgments": [
            {"more_important": "blast", "less_important": "kmeans", "intensity": 9},
            {"more_important": "blast", "less_important": "mum", "intensity": 9},
            {"more_important": "mum", "less_important": "kmeans", "intensity": 3},
        ],
        "criteria": {
            "cost_weight": cost_weight,
            "performance_weight": 1 - cost_weight,
        },
    }


def toy_problem() -> dict:
    return {
        "applications": [{"id": "stream", "weight": 1.0}],
        "architectures": [{"id": "X", "cost": 100}, {"id": "Y", "cost": 200}],
        "measurements": [
            seconds("stream", "X", 200),
            seconds("stream", "Y", 100),
        ],
        "criteria": {"cost_weight": 0.5, "performance_weight": 0.5},
    }


def main() -> int:
    server = subprocess.Popen(
        [sys.executable, "-m", "archgain.cli", "serve", "--port", str(PORT),
         "--quiet"],
        stdout=subprocess.DEVNULL,
        stderr=subprocess.DEVNULL,
    )
    try:
        wait_for_server()
        OUT.mkdir(parents=True, exist_ok=True)

        captures = {
            "weights_criteria": (
                "/api/weights",
                {
                    "items": ["cost", "performance"],
                    "judgments": [{
                        "more_important": "performance",
                        "less_important": "cost",
                        "intensity": 7,
                    }],
                },
            ),
            "weights_bioinfo": (
                "/api/weights",
                {
                    "items": ["blast", "kmeans", "mum"],
                    "judgments": [
                        {"more_important": "blast", "less_important": "mum",
                         "intensity": 9},
                        {"more_important": "blast", "less_important": "kmeans",
                         "intensity": 9},
                        {"more_important": "mum", "less_important": "kmeans",
                         "intensity": 3},
                    ],
                },
            ),
            "evaluate_benchmark_wc30": ("/api/evaluate", benchmark_problem(0.3)),
            "evaluate_benchmark_wc50": ("/api/evaluate", benchmark_problem(0.5)),
            "evaluate_benchmark_wc70": ("/api/evaluate", benchmark_problem(0.7)),
            "evaluate_bioinfo": ("/api/evaluate", bioinformatics_problem()),
            "crossover_benchmark": (
                "/api/sensitivity/crossover", benchmark_problem(0.5)
            ),
            "crossover_toy": ("/api/sensitivity/crossover", toy_problem()),
            "breakeven_benchmark_C": (
                "/api/breakeven",
                {"problem": benchmark_problem(0.5), "architecture": "C"},
            ),
        }

        for name, (route, request) in captures.items():
            response = post(route, request)
            path = OUT / f"{name}.json"
            path.write_text(
                json.dumps({"request": request, "response": response}, indent=2)
                + "\n",
                encoding="utf-8",
            )
            print(f"captured {path.relative_to(OUT.parent.parent)}")
        return 0
    finally:
        server.terminate()
        server.wait(timeout=10)


if __name__ == "__main__":
    sys.exit(main())
