"""Persistence for instance files, dataset manifests and order files."""

import csv
import json
import re
from pathlib import Path

from refuel.exceptions import (
    DatasetWriteError,
    InstanceError,
    InstanceFileNotFoundError,
    InvalidInstanceFileError,
    ManifestError,
    UsageError,
)
from refuel.models.generation import ManifestEntry
from refuel.models.instance import Instance, InstanceMeta, Job

MANIFEST_HEADER = ["n", "sigma", "seed", "index", "path"]


def instance_to_dict(instance: Instance) -> dict:
    data: dict = {}
    if instance.meta is not None:
        meta = instance.meta
        data["meta"] = {"n": meta.n, "sigma": meta.sigma, "seed": meta.seed, "index": meta.index}
    data["jobs"] = [{"id": job.id, "p": job.p, "w": job.w} for job in instance.jobs]
    return data


def instance_from_dict(data: dict) -> Instance:
    """Build an instance from its JSON form; meta is optional.

    Raises:
        KeyError, TypeError, ValueError: On missing or mistyped fields
        InstanceError: On values that break instance invariants
    """
    jobs = tuple(Job(int(job["id"]), job["p"], job["w"]) for job in data["jobs"])
    meta = None
    if raw_meta := data.get("meta"):
        meta = InstanceMeta(
            n=int(raw_meta["n"]),
            sigma=float(raw_meta["sigma"]),
            seed=int(raw_meta["seed"]),
            index=int(raw_meta.get("index", 0)),
        )
        if meta.n != len(jobs):
            raise ValueError(f"meta.n = {meta.n} but {len(jobs)} jobs listed")
    return Instance(jobs, meta)


class InstanceStore:
    """Reads and writes one instance JSON file."""

    def __init__(self, path: Path):
        self.path = path

    def exists(self) -> bool:
        return self.path.exists()

    def load(self) -> Instance:
        """Load the instance.

        Raises:
            InstanceFileNotFoundError: If the file doesn't exist
            InvalidInstanceFileError: If the file is not valid JSON or breaks an invariant
        """
        if not self.path.exists():
            raise InstanceFileNotFoundError(self.path)
        try:
            data = json.loads(self.path.read_text(encoding="utf-8"))
            return instance_from_dict(data)
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            raise InvalidInstanceFileError(self.path, str(e) or type(e).__name__) from e
        except InstanceError as e:
            raise InvalidInstanceFileError(self.path, e.message) from e

    def save(self, instance: Instance) -> None:
        """Write the instance as indented JSON.

        Raises:
            DatasetWriteError: If the file cannot be written
        """
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self.path.write_text(json.dumps(instance_to_dict(instance), indent=2) + "\n", encoding="utf-8")
        except OSError as e:
            raise DatasetWriteError(self.path, e.strerror or str(e)) from e


def write_manifest(entries: list[ManifestEntry], manifest_path: Path) -> None:
    """Write entries as CSV; paths relative to the manifest's directory when possible.

    Raises:
        DatasetWriteError: If the file cannot be written
    """
    base = manifest_path.parent
    try:
        base.mkdir(parents=True, exist_ok=True)
        with open(manifest_path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(MANIFEST_HEADER)
            for entry in entries:
                path = entry.path.relative_to(base) if entry.path.is_relative_to(base) else entry.path
                writer.writerow([entry.n, repr(entry.sigma), entry.seed, entry.index, path.as_posix()])
    except OSError as e:
        raise DatasetWriteError(manifest_path, e.strerror or str(e)) from e


def read_manifest(manifest_path: Path) -> list[ManifestEntry]:
    """Read a manifest; relative paths resolve against its directory.

    Raises:
        ManifestError: If the file is missing, lacks the header or holds bad rows
    """
    if not manifest_path.exists():
        raise ManifestError(manifest_path, "file not found")
    entries: list[ManifestEntry] = []
    with open(manifest_path, encoding="utf-8", newline="") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames is None or list(reader.fieldnames) != MANIFEST_HEADER:
            raise ManifestError(manifest_path, f"expected header {','.join(MANIFEST_HEADER)}")
        for line, row in enumerate(reader, start=2):
            try:
                path = Path(row["path"])
                entries.append(
                    ManifestEntry(
                        n=int(row["n"]),
                        sigma=float(row["sigma"]),
                        seed=int(row["seed"]),
                        index=int(row["index"]),
                        path=path if path.is_absolute() else manifest_path.parent / path,
                    )
                )
            except (TypeError, ValueError) as e:
                raise ManifestError(manifest_path, f"line {line}: {e}") from e
    return entries


def parse_order(text: str) -> list[int]:
    """Parse an order given as '3,1,0', whitespace separated ids, a JSON list or a solve JSON report.

    Raises:
        UsageError: If the text holds anything but integer ids
    """
    text = text.strip()
    if text.startswith(("[", "{")):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise UsageError(f"Order is not valid JSON: {e}") from e
        if isinstance(data, dict):
            data = data.get("order")
        if not isinstance(data, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in data):
            raise UsageError("JSON order must be a list of integer job ids")
        return data
    tokens = [token for token in re.split(r"[,\s]+", text) if token]
    try:
        return [int(token) for token in tokens]
    except ValueError as e:
        raise UsageError(f"Order must list integer job ids: {e}", "Example: --order 2,0,1") from e


def read_order_file(path: Path) -> list[int]:
    """Read an order from a file in any format accepted by parse_order.

    Raises:
        UsageError: If the file is missing or malformed
    """
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"Cannot read order file {path}: {e.strerror or e}") from e
    return parse_order(text)
