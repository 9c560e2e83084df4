"""Experiment dataset plans and their generation to disk."""

import math
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path

from refuel.exceptions import InvalidConfigError
from refuel.generation.instance_generator import generate_instance
from refuel.models.generation import DatasetKind, GenSpec, ManifestEntry
from refuel.state.instance_store import InstanceStore, write_manifest

S1_SIZES = tuple(range(10, 141, 10))
S1_SIGMA = 0.1
S1_COUNT = 50
S2_SIZES = (100, 500, 1000, 2000, 3000)
S2_COUNT = 5
S3_SIZE = 500
S3_COUNT = 5
# Sigma grids are 0.100, 0.101, ..., 1.000 expressed in thousandths.
SIGMA_LO = 100
SIGMA_HI = 1000

MANIFEST_NAME = "manifest.csv"


@dataclass(frozen=True)
class DatasetPlan:
    """Configurations of a dataset in generation order."""

    kind: DatasetKind
    specs: tuple[GenSpec, ...]

    @property
    def total(self) -> int:
        return sum(spec.count for spec in self.specs)


def sigma_grid(step: float = 0.001) -> list[float]:
    """Sigma values from 0.1 to 1.0 inclusive at a multiple of 0.001."""
    thousandths = round(step * 1000)
    if thousandths < 1 or not math.isclose(thousandths, step * 1000):
        raise InvalidConfigError(None, f"sigma step must be a positive multiple of 0.001, got {step}")
    return [k / 1000 for k in range(SIGMA_LO, SIGMA_HI + 1, thousandths)]


def _scaled(value: int, scale: float) -> int:
    return max(1, math.ceil(value * scale))


def plan_dataset(
    kind: DatasetKind,
    scale: float = 1.0,
    seed: int = 0,
    max_n: int | None = None,
    count: int | None = None,
    sigma_step: float = 0.001,
) -> DatasetPlan:
    """Configurations of a named dataset.

    Job counts and instances per configuration are multiplied by scale and
    rounded up. Sizes above max_n are dropped; count replaces the scaled
    instances per configuration.

    Raises:
        InvalidConfigError: On a non-positive scale, a custom kind or a bad sigma step
    """
    if scale <= 0:
        raise InvalidConfigError(None, f"scale must be > 0, got {scale}")
    if kind is DatasetKind.S1:
        configs = [(n, S1_SIGMA, S1_COUNT) for n in S1_SIZES]
    elif kind is DatasetKind.S2:
        configs = [(n, sigma, S2_COUNT) for n in S2_SIZES for sigma in sigma_grid(sigma_step)]
    elif kind is DatasetKind.S3:
        configs = [(S3_SIZE, sigma, S3_COUNT) for sigma in sigma_grid(sigma_step)]
    else:
        raise InvalidConfigError(None, "custom datasets are given as explicit GenSpec lists")

    specs = []
    for n, sigma, per_config in configs:
        n = _scaled(n, scale)
        if max_n is not None and n > max_n:
            continue
        specs.append(GenSpec(n, sigma, seed, count if count is not None else _scaled(per_config, scale)))
    return DatasetPlan(kind, tuple(specs))


def instance_filename(kind: DatasetKind, spec: GenSpec, index: int) -> str:
    return f"{kind.value}_n{spec.n:04d}_s{spec.sigma:.3f}_{index:05d}.json"


def write_dataset(
    plan: DatasetPlan,
    out_dir: Path,
    on_instance: Callable[[ManifestEntry], None] | None = None,
) -> list[ManifestEntry]:
    """Generate every instance of a plan into out_dir and write manifest.csv.

    Indices run over the whole dataset so each file has its own random stream.

    Raises:
        DatasetWriteError: If a file cannot be written
    """
    entries: list[ManifestEntry] = []
    index = 0
    for spec in plan.specs:
        for _ in range(spec.count):
            path = out_dir / instance_filename(plan.kind, spec, index)
            InstanceStore(path).save(generate_instance(spec, index))
            entry = ManifestEntry(spec.n, spec.sigma, spec.seed, index, path)
            entries.append(entry)
            if on_instance is not None:
                on_instance(entry)
            index += 1
    write_manifest(entries, out_dir / MANIFEST_NAME)
    return entries


def generate_dataset(
    kind: DatasetKind,
    scale: float,
    seed: int,
    out_dir: Path,
    specs: list[GenSpec] | None = None,
    max_n: int | None = None,
    count: int | None = None,
    sigma_step: float = 0.001,
    on_instance: Callable[[ManifestEntry], None] | None = None,
) -> list[ManifestEntry]:
    """Plan and write a dataset; custom kinds take their specs verbatim.

    Raises:
        InvalidConfigError: If a custom dataset has no specs
        DatasetWriteError: If a file cannot be written
    """
    if kind is DatasetKind.CUSTOM:
        if not specs:
            raise InvalidConfigError(None, "custom dataset needs at least one GenSpec")
        plan = DatasetPlan(kind, tuple(specs))
    else:
        plan = plan_dataset(kind, scale, seed, max_n, count, sigma_step)
    return write_dataset(plan, out_dir, on_instance)
