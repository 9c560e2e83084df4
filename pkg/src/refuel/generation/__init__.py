"""Random instance and dataset generation."""

from refuel.generation.datasets import (
    MANIFEST_NAME,
    DatasetPlan,
    generate_dataset,
    instance_filename,
    plan_dataset,
    sigma_grid,
    write_dataset,
)
from refuel.generation.instance_generator import generate_instance, rng_for

__all__ = [
    "MANIFEST_NAME",
    "DatasetPlan",
    "generate_dataset",
    "generate_instance",
    "instance_filename",
    "plan_dataset",
    "rng_for",
    "sigma_grid",
    "write_dataset",
]
