"""Document loading, run aggregation, and round-trip serialization."""

import io
import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from archgain import (
    MeasurementSummary,
    PrecisionWarning,
    RunSet,
    SchemaError,
    ValidationError,
    aggregate_runs,
    load_problem,
    load_problem_file,
    load_scenarios,
    parse_weights_document,
    problem_to_document,
    runs_from_csv,
)
from conftest import fixture_doc, fixture_path


class TestAggregateRuns:
    def test_single_run(self):
        summary = aggregate_runs(RunSet("j", "k", (100.0,)))
        assert summary == MeasurementSummary(
            mean=100.0, stddev=0.0, ci95_halfwidth=0.0, count=1
        )

    def test_constant_runs(self):
        summary = aggregate_runs(RunSet("j", "k", (10.0,) * 4))
        assert summary.mean == 10.0
        assert summary.stddev == 0.0
        assert summary.ci95_halfwidth == 0.0

    def test_three_spread_runs_use_student_t(self):
        with pytest.warns(PrecisionWarning):
            summary = aggregate_runs(RunSet("j", "k", (9.0, 10.0, 11.0)))
        assert summary.mean == pytest.approx(10.0)
        assert summary.stddev == pytest.approx(1.0)
        # two-sided 95% quantile at 2 degrees of freedom is 4.3027
        assert summary.ci95_halfwidth == pytest.approx(
            4.302652729911275 / math.sqrt(3), abs=1e-9
        )
        assert summary.ci95_halfwidth == pytest.approx(2.4842, abs=5e-4)

    def test_quiet_when_precise(self):
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("error")
            aggregate_runs(RunSet("j", "k", (1000.0, 1000.1, 999.9)))

    def test_threshold_configurable(self):
        runs = RunSet("j", "k", (1000.0, 1001.0, 999.0))
        with pytest.warns(PrecisionWarning):
            aggregate_runs(runs, warn_threshold=0.0001)

    def test_empty_samples_rejected(self):
        with pytest.raises(ValidationError, match="no samples"):
            RunSet("j", "k", ())

    def test_nonpositive_sample_rejected(self):
        with pytest.raises(ValidationError, match="positive"):
            RunSet("j", "k", (5.0, -1.0))

    @given(st.lists(st.floats(min_value=0.1, max_value=1e6), min_size=1,
                    max_size=40),
           st.randoms(use_true_random=False))
    @settings(max_examples=100)
    def test_permutation_invariant(self, samples, rng):
        import warnings

        shuffled = list(samples)
        rng.shuffle(shuffled)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            first = aggregate_runs(RunSet("j", "k", tuple(samples)))
            second = aggregate_runs(RunSet("j", "k", tuple(shuffled)))
        assert first.mean == pytest.approx(second.mean, rel=1e-12)
        assert first.stddev == pytest.approx(second.stddev, rel=1e-9, abs=1e-12)
        assert first.count == second.count


class TestLoadProblem:
    def test_benchmark_fixture(self, btree_lud_problem):
        assert btree_lud_problem.application_ids == ("Btree", "lud")
        assert btree_lud_problem.architecture_ids == ("A", "B", "C")
        assert btree_lud_problem.costs == (8900.0, 8760.0, 8000.0)
        assert btree_lud_problem.criteria.cost_weight == 0.5

    def test_judgment_block_drives_weights(self):
        problem, warnings = load_problem(fixture_doc("bioinfo.json"))
        weights = dict(zip(problem.application_ids, problem.application_weights))
        assert weights["blast"] == pytest.approx(0.794, abs=1e-3)
        assert weights["kmeans"] == pytest.approx(0.067, abs=1e-3)
        assert weights["mum"] == pytest.approx(0.140, abs=1e-3)
        assert any("derived from 3 pairwise" in w for w in warnings)

    def test_raw_runs_are_aggregated_with_audit_line(self):
        doc = fixture_doc("twin_times.json")
        doc["measurements"][0] = {
            "application": "app", "architecture": "P", "unit": "seconds",
            "runs": [99.0, 100.0, 101.0],
        }
        problem, warnings = load_problem(doc)
        index = problem.architecture_ids.index("P")
        assert problem.times.seconds[0][index] == pytest.approx(100.0)
        assert any("aggregated 3 run(s)" in w for w in warnings)
        assert any("half-width" in w for w in warnings)  # 2.48% of the mean

    def test_missing_pair_rejected_by_name(self):
        doc = fixture_doc("btree_lud.json")
        doc["measurements"] = [
            m for m in doc["measurements"]
            if not (m["application"] == "lud" and m["architecture"] == "B")
        ]
        with pytest.raises(ValidationError, match="'lud', 'B'"):
            load_problem(doc)

    def test_duplicate_measurement_rejected(self):
        doc = fixture_doc("btree_lud.json")
        doc["measurements"].append(dict(doc["measurements"][0]))
        with pytest.raises(ValidationError, match="more than once"):
            load_problem(doc)

    def test_runs_and_mean_together_rejected(self):
        doc = fixture_doc("twin_times.json")
        doc["measurements"][0]["runs"] = [100.0]
        with pytest.raises(ValidationError, match="exactly one of"):
            load_problem(doc)

    def test_neither_runs_nor_mean_rejected(self):
        doc = fixture_doc("twin_times.json")
        del doc["measurements"][0]["mean"]
        with pytest.raises(ValidationError, match="exactly one of"):
            load_problem(doc)

    def test_unit_must_be_seconds(self):
        doc = fixture_doc("twin_times.json")
        doc["measurements"][0]["unit"] = "ms"
        with pytest.raises(ValidationError, match="seconds"):
            load_problem(doc)

    def test_weights_from_both_sources_rejected(self):
        doc = fixture_doc("bioinfo.json")
        doc["applications"][0]["weight"] = 0.5
        doc["applications"][1]["weight"] = 0.25
        doc["applications"][2]["weight"] = 0.25
        with pytest.raises(ValidationError, match="both"):
            load_problem(doc)

    def test_partial_explicit_weights_rejected(self):
        doc = fixture_doc("btree_lud.json")
        del doc["applications"][1]["weight"]
        with pytest.raises(ValidationError, match="every application"):
            load_problem(doc)

    def test_no_weight_source_rejected_for_multiple_apps(self):
        doc = fixture_doc("btree_lud.json")
        for entry in doc["applications"]:
            del entry["weight"]
        with pytest.raises(ValidationError, match="weights missing"):
            load_problem(doc)

    def test_single_application_defaults_to_full_weight(self):
        doc = fixture_doc("crossover_toy.json")
        del doc["applications"][0]["weight"]
        problem, warnings = load_problem(doc)
        assert problem.application_weights == (1.0,)
        assert any("assigned weight 1.0" in w for w in warnings)

    def test_drifting_weights_rejected_then_renormalized(self):
        doc = fixture_doc("bioinfo_literal.json")
        with pytest.raises(ValidationError, match="renormalize"):
            load_problem(doc)
        problem, warnings = load_problem(doc, renormalize_weights=True)
        assert problem.application_weights == pytest.approx(
            (1 / 3, 1 / 3, 1 / 3), abs=1e-12
        )
        assert any("renormalized" in w for w in warnings)

    def test_options_block_enables_renormalization(self):
        problem, warnings = load_problem(fixture_doc("bioinfo_literal_renorm.json"))
        assert sum(problem.application_weights) == pytest.approx(1.0, abs=1e-12)
        assert any("renormalized" in w for w in warnings)

    def test_criteria_judgment_derives_exact_split(self):
        doc = fixture_doc("btree_lud.json")
        doc["criteria"] = {
            "judgment": {"preferred": "performance", "intensity": 7}
        }
        problem, warnings = load_problem(doc)
        assert problem.criteria.cost_weight == 0.125
        assert problem.criteria.performance_weight == 0.875
        assert any("criteria weights derived" in w for w in warnings)

    def test_equal_criteria_judgment(self):
        doc = fixture_doc("btree_lud.json")
        doc["criteria"] = {"judgment": {"preferred": "cost", "intensity": 1}}
        problem, _ = load_problem(doc)
        assert problem.criteria.cost_weight == 0.5

    def test_unknown_measurement_ids_rejected(self):
        doc = fixture_doc("btree_lud.json")
        doc["measurements"][0]["application"] = "ghost"
        with pytest.raises(ValidationError, match="ghost"):
            load_problem(doc)

    def test_unknown_top_level_key_rejected(self):
        doc = fixture_doc("btree_lud.json")
        doc["measurments"] = doc.pop("measurements")
        with pytest.raises(SchemaError, match="measurments"):
            load_problem(doc)

    def test_mixed_currencies_rejected(self):
        doc = fixture_doc("btree_lud.json")
        doc["architectures"][0]["currency"] = "EUR"
        with pytest.raises(ValidationError, match="currency"):
            load_problem(doc)

    def test_negative_cost_rejected_with_path(self):
        doc = fixture_doc("btree_lud.json")
        doc["architectures"][1]["cost"] = -2
        with pytest.raises(ValidationError, match=r"architectures\[1\]"):
            load_problem(doc)

    def test_ids_are_sorted_canonically(self):
        doc = fixture_doc("btree_lud.json")
        doc["applications"].reverse()
        doc["architectures"].reverse()
        problem, _ = load_problem(doc)
        assert problem.application_ids == ("Btree", "lud")
        assert problem.architecture_ids == ("A", "B", "C")

    def test_file_loader_rejects_bad_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(SchemaError, match="not valid JSON"):
            load_problem_file(path)

    def test_file_loader_reads_fixture(self):
        problem, _ = load_problem_file(fixture_path("btree_lud.json"))
        assert problem.architecture_ids == ("A", "B", "C")


class TestRoundTrip:
    @pytest.mark.parametrize(
        "name",
        ["btree_lud.json", "bioinfo.json", "crossover_toy.json",
         "twin_times.json"],
    )
    def test_serialize_then_reload_is_identity(self, name):
        problem, _ = load_problem(fixture_doc(name))
        document = problem_to_document(problem)
        reloaded, warnings = load_problem(document)
        assert reloaded == problem
        assert problem_to_document(reloaded) == document
        # the canonical document carries everything explicitly
        assert not any("derived" in w for w in warnings)

    def test_full_precision_floats_survive(self):
        problem, _ = load_problem(fixture_doc("bioinfo.json"))
        text = json.dumps(problem_to_document(problem))
        reloaded, _ = load_problem(json.loads(text))
        assert reloaded == problem


class TestRunsFromCsv:
    def test_groups_samples_per_pair(self, tmp_path):
        path = tmp_path / "runs.csv"
        path.write_text(
            "application,architecture,seconds\n"
            "lud,A,347\nlud,A,349\nBtree,A,2489\nlud,A,345\n",
            encoding="utf-8",
        )
        entries = runs_from_csv(path)
        assert entries == [
            {"application": "lud", "architecture": "A", "unit": "seconds",
             "runs": [347.0, 349.0, 345.0]},
            {"application": "Btree", "architecture": "A", "unit": "seconds",
             "runs": [2489.0]},
        ]

    def test_accepts_text_stream(self):
        entries = runs_from_csv(
            io.StringIO("application,architecture,seconds\nj,k,5\n")
        )
        assert entries[0]["runs"] == [5.0]

    def test_wrong_header_rejected(self):
        with pytest.raises(SchemaError, match="header"):
            runs_from_csv(io.StringIO("app,arch,time\nj,k,5\n"))

    def test_non_numeric_sample_rejected_with_line(self):
        with pytest.raises(SchemaError, match="csv:3"):
            runs_from_csv(
                io.StringIO(
                    "application,architecture,seconds\nj,k,5\nj,k,fast\n"
                )
            )

    def test_nonpositive_sample_rejected(self):
        with pytest.raises(ValidationError, match="positive"):
            runs_from_csv(
                io.StringIO("application,architecture,seconds\nj,k,0\n")
            )


class TestStandaloneDocuments:
    def test_weights_document_parses(self):
        matrix = parse_weights_document(fixture_doc("judgments_criteria.json"))
        assert matrix.labels == ("cost", "performance")

    def test_weights_document_unknown_item(self):
        doc = fixture_doc("judgments_criteria.json")
        doc["judgments"][0]["more_important"] = "ghost"
        with pytest.raises(ValidationError, match="ghost"):
            parse_weights_document(doc)

    def test_reciprocal_intensity_rejected_in_documents(self):
        doc = fixture_doc("judgments_criteria.json")
        doc["judgments"][0]["intensity"] = 0.5
        with pytest.raises(ValidationError, match=r"\[1, 9\]"):
            parse_weights_document(doc)

    def test_scenarios_must_cover_applications(self, btree_lud_problem):
        doc = fixture_doc("scenarios_btree_lud.json")
        del doc["scenarios"][0]["application_weights"]["lud"]
        with pytest.raises(ValidationError, match="cover"):
            load_scenarios(doc, btree_lud_problem)

    def test_scenarios_weights_must_sum_to_one(self, btree_lud_problem):
        doc = fixture_doc("scenarios_btree_lud.json")
        doc["scenarios"][0]["application_weights"]["lud"] = 0.4
        with pytest.raises(ValidationError, match="sum"):
            load_scenarios(doc, btree_lud_problem)

    def test_scenario_criteria_may_be_judgments(self, btree_lud_problem):
        doc = fixture_doc("scenarios_btree_lud.json")
        doc["scenarios"][0]["criteria"] = {
            "judgment": {"preferred": "performance", "intensity": 7}
        }
        scenarios = load_scenarios(doc, btree_lud_problem)
        assert scenarios[0].criteria.cost_weight == 0.125
