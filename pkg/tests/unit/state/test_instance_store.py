"""Tests for instance, manifest and order persistence."""

import json
from pathlib import Path

import pytest

from refuel.exceptions import InstanceFileNotFoundError, InvalidInstanceFileError, ManifestError, UsageError
from refuel.models.generation import ManifestEntry
from refuel.models.instance import Instance, InstanceMeta
from refuel.state import InstanceStore, parse_order, read_manifest, read_order_file, write_manifest


class TestInstanceStore:
    def test_save_and_load(self, tmp_path):
        instance = Instance.from_pairs([(2, 12.0), (9, 162.5)], InstanceMeta(2, 0.1, 42, 3))
        store = InstanceStore(tmp_path / "nested" / "inst.json")
        store.save(instance)
        assert store.exists()
        assert store.load() == instance

    def test_file_format(self, tmp_path, crossing_pair):
        path = tmp_path / "inst.json"
        InstanceStore(path).save(crossing_pair)
        data = json.loads(path.read_text())
        assert "meta" not in data
        assert data["jobs"][1] == {"id": 1, "p": 9, "w": 162.0}

    def test_missing_file(self, tmp_path):
        with pytest.raises(InstanceFileNotFoundError):
            InstanceStore(tmp_path / "nope.json").load()

    @pytest.mark.parametrize(
        "content",
        [
            "{not json",
            json.dumps({"meta": {}}),
            json.dumps({"jobs": [{"id": 0, "p": 0, "w": 1.0}]}),
            json.dumps({"jobs": [{"id": 1, "p": 1, "w": 1.0}]}),
            json.dumps({"meta": {"n": 3, "sigma": 0.1, "seed": 1}, "jobs": [{"id": 0, "p": 1, "w": 1.0}]}),
        ],
    )
    def test_invalid_files(self, tmp_path, content):
        path = tmp_path / "bad.json"
        path.write_text(content)
        with pytest.raises(InvalidInstanceFileError):
            InstanceStore(path).load()


class TestManifest:
    def test_relative_paths(self, tmp_path):
        entries = [ManifestEntry(5, 0.25, 1, 0, tmp_path / "a.json")]
        write_manifest(entries, tmp_path / "manifest.csv")
        assert (tmp_path / "manifest.csv").read_text().splitlines()[1] == "5,0.25,1,0,a.json"
        assert read_manifest(tmp_path / "manifest.csv") == entries

    def test_absolute_paths_kept(self, tmp_path):
        elsewhere = Path("/data/x.json")
        write_manifest([ManifestEntry(5, 0.25, 1, 0, elsewhere)], tmp_path / "manifest.csv")
        assert read_manifest(tmp_path / "manifest.csv")[0].path == elsewhere

    def test_missing(self, tmp_path):
        with pytest.raises(ManifestError):
            read_manifest(tmp_path / "manifest.csv")

    def test_bad_header(self, tmp_path):
        (tmp_path / "manifest.csv").write_text("a,b\n1,2\n")
        with pytest.raises(ManifestError):
            read_manifest(tmp_path / "manifest.csv")

    def test_bad_row(self, tmp_path):
        (tmp_path / "manifest.csv").write_text("n,sigma,seed,index,path\nten,0.1,0,0,a.json\n")
        with pytest.raises(ManifestError, match="line 2"):
            read_manifest(tmp_path / "manifest.csv")


class TestOrders:
    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("3,1,0", [3, 1, 0]),
            (" 3, 1 ,0 ", [3, 1, 0]),
            ("3 1\n0", [3, 1, 0]),
            ("[2, 0, 1]", [2, 0, 1]),
            ('{"algo": "fast", "order": [1, 0]}', [1, 0]),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_order(text) == expected

    @pytest.mark.parametrize("text", ["1,a,2", "[1, 2.5]", '{"order": "1,2"}', "[1,"])
    def test_parse_rejects(self, text):
        with pytest.raises(UsageError):
            parse_order(text)

    def test_order_file(self, tmp_path):
        path = tmp_path / "order.txt"
        path.write_text("1,0\n")
        assert read_order_file(path) == [1, 0]

    def test_missing_order_file(self, tmp_path):
        with pytest.raises(UsageError):
            read_order_file(tmp_path / "missing.txt")
