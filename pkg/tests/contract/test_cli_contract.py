"""Contract tests for the refuel command line: output formats and exit codes."""

import json

import pytest
from click.testing import CliRunner

from refuel.bench.report_writer import read_records
from refuel.cli import cli
from refuel.exceptions import SolveTimeoutError
from refuel.generation import generate_dataset
from refuel.models.bench import BenchStatus
from refuel.models.generation import DatasetKind, GenSpec, ManifestEntry
from refuel.models.instance import Instance
from refuel.state.instance_store import write_manifest

CROSSING_PAYOFF = 228 / 11


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def pair_file(instance_file, crossing_pair):
    return instance_file(crossing_pair, "pair.json")


def parse_text_report(output: str) -> dict[str, str]:
    return dict(line.split(": ", 1) for line in output.strip().splitlines())


class TestSolve:
    def test_text_report(self, runner, pair_file):
        result = runner.invoke(cli, ["solve", str(pair_file)])
        assert result.exit_code == 0
        report = parse_text_report(result.output)
        assert report["algo"] == "fast"
        assert report["order"] == "0,1"
        assert float(report["payoff"]) == pytest.approx(CROSSING_PAYOFF, rel=1e-12)
        assert (report["leaves"], report["branches"], report["nodes"]) == ("1", "1", "3")

    def test_exact_mode(self, runner, pair_file):
        result = runner.invoke(cli, ["solve", str(pair_file), "--mode", "exact"])
        assert result.exit_code == 0
        assert parse_text_report(result.output)["payoff_exact"] == "228/11"

    def test_emit_order(self, runner, pair_file):
        result = runner.invoke(cli, ["solve", str(pair_file), "--emit-order"])
        assert result.exit_code == 0
        assert result.output == "0,1\n"

    def test_json_matches_text(self, runner, instance_file, make_instance):
        path = instance_file(make_instance(8, 0.4, seed=5))
        text = parse_text_report(runner.invoke(cli, ["solve", str(path)]).output)
        data = json.loads(runner.invoke(cli, ["solve", str(path), "--emit-json"]).output)
        assert data["payoff"] == float(text["payoff"])
        assert ",".join(map(str, data["order"])) == text["order"]
        assert data["leaves"] == int(text["leaves"])
        assert data["nodes"] == int(text["nodes"])

    def test_dropout(self, runner, pair_file):
        data = json.loads(runner.invoke(cli, ["solve", str(pair_file), "--emit-json", "--dropout"]).output)
        assert data["dropout"] == [1, 0]

    @pytest.mark.parametrize("algo", ["astar", "brute", "greedy"])
    def test_other_algorithms(self, runner, pair_file, algo):
        data = json.loads(runner.invoke(cli, ["solve", str(pair_file), "--algo", algo, "--emit-json"]).output)
        assert data["algo"] == algo
        assert data["payoff"] == pytest.approx(CROSSING_PAYOFF)

    def test_size_guard(self, runner, instance_file, make_instance):
        path = instance_file(make_instance(11, 0.3))
        assert runner.invoke(cli, ["solve", str(path), "--algo", "brute"]).exit_code == 3

    def test_size_guard_override_flag(self, runner, instance_file):
        path = instance_file(Instance.from_pairs([(1, float(k)) for k in range(31, 0, -1)]))
        args = ["solve", str(path), "--algo", "astar", "--prune", "--emit-order"]
        assert runner.invoke(cli, args).exit_code == 3
        result = runner.invoke(cli, [*args, "--override-size-guard"])
        assert result.exit_code == 0
        assert result.output == ",".join(map(str, range(31))) + "\n"

    def test_timeout(self, runner, pair_file, mocker):
        mocker.patch("refuel.cli.solve.solve_with", side_effect=SolveTimeoutError("fast", 0.01, 512))
        assert runner.invoke(cli, ["solve", str(pair_file), "--timeout", "0.01"]).exit_code == 4

    @pytest.mark.parametrize(
        "args",
        [
            ["--emit-order", "--emit-json"],
            ["--timeout", "0"],
            ["--algo", "simplex"],
            ["--mode", "decimal"],
        ],
    )
    def test_usage_errors(self, runner, pair_file, args):
        assert runner.invoke(cli, ["solve", str(pair_file), *args]).exit_code == 2

    def test_missing_file(self, runner, tmp_path):
        assert runner.invoke(cli, ["solve", str(tmp_path / "absent.json")]).exit_code == 1

    def test_malformed_file(self, runner, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"jobs": [{"id": 0, "p": 0, "w": 1.0}]}')
        assert runner.invoke(cli, ["solve", str(path)]).exit_code == 1


class TestValidate:
    def test_potential_order(self, runner, pair_file):
        result = runner.invoke(cli, ["validate", str(pair_file), "--order", "0,1"])
        assert result.exit_code == 0
        assert "payoff: 20.72727272727" in result.output

    def test_violating_order(self, runner, pair_file):
        result = runner.invoke(cli, ["validate", str(pair_file), "--order", "1,0", "--emit-json"])
        assert result.exit_code == 5
        data = json.loads(result.output[: result.output.rindex("}") + 1])
        assert not data["valid"]
        assert data["payoff"] == pytest.approx(210 / 11)
        assert [(v["earlier"], v["later"]) for v in data["violations"]] == [(1, 0)]

    def test_order_file(self, runner, pair_file, tmp_path):
        order = tmp_path / "order.json"
        order.write_text('{"order": [0, 1]}')
        assert runner.invoke(cli, ["validate", str(pair_file), "--order-file", str(order)]).exit_code == 0

    @pytest.mark.parametrize("args", [[], ["--order", "0,1", "--order-file", "x.txt"], ["--order", "0,x"]])
    def test_usage_errors(self, runner, pair_file, args):
        assert runner.invoke(cli, ["validate", str(pair_file), *args]).exit_code == 2

    def test_not_a_permutation(self, runner, pair_file):
        assert runner.invoke(cli, ["validate", str(pair_file), "--order", "0,0"]).exit_code == 1


class TestCount:
    def test_brute_counts_every_order_of_identical_jobs(self, runner, instance_file, identical_jobs):
        path = instance_file(identical_jobs)
        result = runner.invoke(cli, ["count", str(path), "--brute"])
        assert result.exit_code == 0
        assert result.output == "6\n"

    def test_enumeration_json(self, runner, pair_file):
        data = json.loads(runner.invoke(cli, ["count", str(pair_file), "--emit-json"]).output)
        assert data["count"] == 1
        assert data["method"] == "fast"


class TestGen:
    def test_prints_instance(self, runner):
        result = runner.invoke(cli, ["gen", "--n", "5", "--sigma", "0.2", "--seed", "3"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["meta"] == {"n": 5, "sigma": 0.2, "seed": 3, "index": 0}
        assert [job["id"] for job in data["jobs"]] == list(range(5))

    def test_same_seed_same_instance(self, runner):
        args = ["gen", "--n", "7", "--sigma", "0.9", "--seed", "11", "--index", "2"]
        assert runner.invoke(cli, args).output == runner.invoke(cli, args).output

    def test_gen_solve_validate(self, runner, tmp_path):
        path = tmp_path / "inst.json"
        assert runner.invoke(cli, ["gen", "--n", "9", "--sigma", "0.6", "--seed", "2", "--out", str(path)]).exit_code == 0
        order = runner.invoke(cli, ["solve", str(path), "--emit-order"]).output.strip()
        assert runner.invoke(cli, ["validate", str(path), "--order", order]).exit_code == 0

    def test_dataset(self, runner, tmp_path):
        out = tmp_path / "s1"
        result = runner.invoke(cli, ["gen", "--dataset", "S1", "--max-n", "20", "--count", "2", "--out-dir", str(out)])
        assert result.exit_code == 0
        assert len(list(out.glob("S1_*.json"))) == 4
        assert (out / "manifest.csv").read_text().startswith("n,sigma,seed,index,path\n")

    @pytest.mark.parametrize(
        "args",
        [
            [],
            ["--n", "5"],
            ["--n", "5", "--sigma", "0.1", "--dataset", "S1", "--out-dir", "x"],
            ["--dataset", "S1"],
            ["--n", "0", "--sigma", "0.1"],
            ["--n", "5", "--sigma", "-1"],
            ["--n", "5", "--sigma", "0.1", "--seed", "-1"],
        ],
    )
    def test_usage_errors(self, runner, args):
        assert runner.invoke(cli, ["gen", *args]).exit_code == 2


class TestBench:
    def test_writes_outputs(self, runner, tmp_path):
        specs = [GenSpec(6, 0.3, 1, count=2)]
        generate_dataset(DatasetKind.CUSTOM, 1.0, 1, tmp_path / "data", specs=specs)
        out = tmp_path / "out"
        result = runner.invoke(
            cli,
            ["bench", str(tmp_path / "data" / "manifest.csv"), "--algos", "fast,astar,brute", "--timeout", "30", "--out-dir", str(out)],
        )
        assert result.exit_code == 0
        for name in ("records.csv", "speedup.csv", "hardness.csv", "table1.csv", "summary.md"):
            assert (out / name).exists()
        assert len((out / "records.csv").read_text().splitlines()) == 1 + 2 * 3

    def test_profile(self, runner, tmp_path):
        generate_dataset(DatasetKind.CUSTOM, 1.0, 0, tmp_path / "data", specs=[GenSpec(5, 0.1, 0)])
        profile = tmp_path / "profile.yaml"
        profile.write_text("algos: [greedy]\ntimeout_s: 5\n")
        out = tmp_path / "out"
        result = runner.invoke(
            cli, ["bench", str(tmp_path / "data" / "manifest.csv"), "--profile", str(profile), "--out-dir", str(out)]
        )
        assert result.exit_code == 0
        assert ",greedy," in (out / "records.csv").read_text()

    def test_size_guard_override_flag(self, runner, instance_file, tmp_path):
        path = instance_file(Instance.from_pairs([(1, float(k)) for k in range(31, 0, -1)]), "wide.json")
        manifest = tmp_path / "manifest.csv"
        write_manifest([ManifestEntry(31, 0.0, 0, 0, path)], manifest)
        args = ["bench", str(manifest), "--algos", "astar", "--prune"]

        assert runner.invoke(cli, [*args, "--out-dir", str(tmp_path / "guarded")]).exit_code == 0
        [skipped] = read_records(tmp_path / "guarded" / "records.csv")
        assert skipped.status is BenchStatus.SKIPPED

        result = runner.invoke(cli, [*args, "--override-size-guard", "--out-dir", str(tmp_path / "out")])
        assert result.exit_code == 0
        [record] = read_records(tmp_path / "out" / "records.csv")
        assert record.status is BenchStatus.OK

    def test_bad_algos(self, runner, tmp_path):
        assert runner.invoke(cli, ["bench", str(tmp_path / "m.csv"), "--algos", "fast,simplex"]).exit_code == 2

    def test_missing_manifest(self, runner, tmp_path):
        result = runner.invoke(cli, ["bench", str(tmp_path / "m.csv"), "--out-dir", str(tmp_path / "out")])
        assert result.exit_code == 1


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "refuelkit" in result.output
