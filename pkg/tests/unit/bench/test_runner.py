"""Tests for the bench harness and its output files."""

import csv

import pytest

from refuel.bench import run_bench, run_task, solve_with
from refuel.bench.report_writer import SUMMARY_FILE, read_records, write_bench_outputs
from refuel.bench.runner import BenchTask
from refuel.exceptions import SolveTimeoutError
from refuel.generation import generate_dataset
from refuel.models.bench import CSV_HEADER, BenchStatus
from refuel.models.generation import DatasetKind, GenSpec, ManifestEntry
from refuel.models.instance import Instance, NumericMode
from refuel.state.instance_store import InstanceStore


@pytest.fixture
def dataset(tmp_path):
    specs = [GenSpec(8, 0.5, 3, count=2), GenSpec(6, 0.0, 3)]
    return generate_dataset(DatasetKind.CUSTOM, 1.0, 3, tmp_path / "data", specs=specs)


@pytest.fixture
def wide_entry(tmp_path):
    # Equal lengths and distinct weights: every pair is globally ordered.
    path = tmp_path / "wide.json"
    InstanceStore(path).save(Instance.from_pairs([(1, float(k)) for k in range(31, 0, -1)]))
    return ManifestEntry(31, 0.0, 0, 0, path)


class TestSolveWith:
    @pytest.mark.parametrize("algo", ["fast", "astar", "brute", "greedy"])
    def test_dispatch(self, crossing_pair, algo):
        assert solve_with(algo, crossing_pair).algo == algo

    def test_unknown(self, crossing_pair):
        with pytest.raises(ValueError, match="unknown"):
            solve_with("simplex", crossing_pair)


class TestRunBench:
    def test_record_order_and_agreement(self, dataset):
        records = run_bench(dataset, ["fast", "brute"], 60.0)
        assert [(r.instance, r.algo) for r in records] == [
            (entry.path.as_posix(), algo) for entry in dataset for algo in ("fast", "brute")
        ]
        assert all(r.status is BenchStatus.OK for r in records)
        for fast, brute in zip(records[::2], records[1::2], strict=True):
            assert fast.payoff == pytest.approx(brute.payoff, rel=1e-9)
            assert fast.leaves is not None
            assert brute.leaves is None

    def test_equal_ratio_instance_has_one_leaf(self, dataset):
        records = run_bench(dataset[2:], ["fast"], 60.0)
        assert records[0].leaves == 1

    def test_timeout_record(self, dataset, mocker):
        mocker.patch("refuel.bench.runner.solve_with", side_effect=SolveTimeoutError("fast", 0.5, 10))
        [record] = run_bench(dataset[:1], ["fast"], 0.5)
        assert record.status is BenchStatus.TIMEOUT
        assert record.payoff is None
        assert record.elapsed == 0.5

    def test_size_guard_and_missing_file_are_skipped(self, tmp_path):
        entries = [ManifestEntry(3, 0.1, 0, 0, tmp_path / "missing.json")]
        [record] = run_bench(entries, ["fast"], 1.0)
        assert record.status is BenchStatus.SKIPPED
        assert "not found" in record.note

    def test_brute_refuses_large_instances(self, tmp_path):
        [entry] = generate_dataset(DatasetKind.CUSTOM, 1.0, 0, tmp_path, specs=[GenSpec(12, 0.5, 0)])
        record = run_task(BenchTask(entry, "brute", NumericMode.FAST, 1.0))
        assert record.status is BenchStatus.SKIPPED

    def test_override_lifts_size_guard(self, wide_entry):
        [guarded] = run_bench([wide_entry], ["astar"], 60.0, prune=True)
        assert guarded.status is BenchStatus.SKIPPED
        [record] = run_bench([wide_entry], ["astar"], 60.0, prune=True, override=True)
        assert record.status is BenchStatus.OK
        assert record.payoff == pytest.approx(sum(k / (32 - k) for k in range(31, 0, -1)))

    def test_override_reaches_solver(self, dataset, mocker):
        spy = mocker.patch("refuel.bench.runner.solve_with", wraps=solve_with)
        run_task(BenchTask(dataset[0], "astar", NumericMode.FAST, 60.0, override=True))
        assert spy.call_args.args[-1] is True

    def test_worker_pool_keeps_order(self, dataset):
        serial = run_bench(dataset, ["fast", "greedy"], 60.0)
        parallel = run_bench(dataset, ["fast", "greedy"], 60.0, workers=2)
        assert [(r.instance, r.algo, r.payoff, r.leaves) for r in serial] == [
            (r.instance, r.algo, r.payoff, r.leaves) for r in parallel
        ]

    def test_progress_callback(self, dataset):
        seen = []
        run_bench(dataset, ["greedy"], 60.0, on_record=seen.append)
        assert len(seen) == len(dataset)


class TestOutputs:
    def test_files_and_roundtrip(self, dataset, tmp_path):
        records = run_bench(dataset, ["fast", "astar"], 60.0)
        settings = {"algos": ["fast", "astar"], "mode": "fast", "timeout_s": 60.0, "workers": 1}
        paths = write_bench_outputs(records, tmp_path / "out", settings)
        assert all(path.exists() for path in paths.values())
        with open(paths["records.csv"], encoding="utf-8") as f:
            assert next(csv.reader(f)) == CSV_HEADER
        reread = read_records(paths["records.csv"])
        assert [(r.payoff, r.leaves, r.status) for r in reread] == [(r.payoff, r.leaves, r.status) for r in records]
        summary = paths[SUMMARY_FILE].read_text()
        assert "# Benchmark summary" in summary
        assert "Records: 6 (6 ok, 0 timeout, 0 skipped)" in summary
        assert "| 8 | 2 |" in summary
