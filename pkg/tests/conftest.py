"""Pytest configuration and shared instances."""

from pathlib import Path

import pytest

from refuel.generation import generate_instance
from refuel.models.generation import GenSpec
from refuel.models.instance import Instance
from refuel.state.instance_store import InstanceStore

_DIR_MARKERS = {"unit": pytest.mark.unit, "contract": pytest.mark.contract, "integration": pytest.mark.integration}


def pytest_collection_modifyitems(config, items):
    """Mark tests by directory: tests/unit -> unit, tests/contract -> contract, tests/integration -> integration."""
    root = Path(__file__).parent
    for item in items:
        parts = Path(item.fspath).relative_to(root).parts
        if parts and parts[0] in _DIR_MARKERS:
            item.add_marker(_DIR_MARKERS[parts[0]])


@pytest.fixture
def project_root():
    """Return project root directory."""
    return Path(__file__).parent.parent


@pytest.fixture
def crossing_pair():
    """i = (2, 12), j = (9, 162): φ_i > φ_j before t* = 1.5, φ_j > φ_i after."""
    return Instance.from_pairs([(2, 12.0), (9, 162.0)])


@pytest.fixture
def three_jobs():
    """(2, 12), (1, 1), (9, 162) with φ at 0 equal to 3, 1 and 2."""
    return Instance.from_pairs([(2, 12.0), (1, 1.0), (9, 162.0)])


@pytest.fixture
def identical_jobs():
    """Three jobs with p = 1, w = 1."""
    return Instance.from_pairs([(1, 1.0), (1, 1.0), (1, 1.0)])


@pytest.fixture
def make_instance():
    """Factory for generated instances: make_instance(n, sigma, seed=0, index=0)."""

    def _make(n: int, sigma: float, seed: int = 0, index: int = 0) -> Instance:
        return generate_instance(GenSpec(n, sigma, seed), index)

    return _make


@pytest.fixture
def instance_file(tmp_path):
    """Factory writing an instance to tmp_path and returning the path."""

    def _write(instance: Instance, name: str = "instance.json") -> Path:
        path = tmp_path / name
        InstanceStore(path).save(instance)
        return path

    return _write
