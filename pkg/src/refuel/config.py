"""Environment and profile configuration for refuelkit.

Supports environment variables:
- REFUEL_DEBUG: Enable debug console traces (true/false)
- REFUEL_MODE: Default numeric mode (fast/exact)
- REFUEL_TIMEOUT: Default solve and bench timeout in seconds
- REFUEL_WORKERS: Default number of bench worker processes
- REFUEL_OUTPUT_DIR: Default bench output directory
- REFUEL_SIZE_GUARD_OVERRIDE: Lift the brute force / A* size guards (true/false)

Benchmark profiles are YAML files (see templates/bench-profile-template.yaml);
CLI flags override profile values and profile values override the environment.
"""

import os
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from refuel.exceptions import EnvironmentVariableError, InvalidConfigError
from refuel.models.instance import NumericMode

ALGORITHMS = ("fast", "astar", "brute", "greedy")
_TRUTHY = ("true", "1", "yes")

# Dataset generation defaults that keep a full bench run on a desk machine
# in the order of minutes. --full-scale switches to the published setup.
DESK_DEFAULTS: dict[str, dict] = {
    "S1": {"scale": 1.0, "max_n": 60, "count": 10, "sigma_step": 0.001},
    "S2": {"scale": 0.1, "max_n": 100, "count": None, "sigma_step": 0.01},
    "S3": {"scale": 0.2, "max_n": None, "count": None, "sigma_step": 0.01},
}
FULL_SCALE: dict = {"scale": 1.0, "max_n": None, "count": None, "sigma_step": 0.001}


class RefuelConfig:
    """Configuration manager for refuelkit."""

    @staticmethod
    def is_debug_enabled() -> bool:
        """Check if debug mode is enabled.

        Returns:
            True if REFUEL_DEBUG is set to 'true', '1' or 'yes'
        """
        return os.environ.get("REFUEL_DEBUG", "").lower() in _TRUTHY

    @staticmethod
    def size_guard_overridden() -> bool:
        """Check whether exhaustive algorithms may exceed their size guards."""
        return os.environ.get("REFUEL_SIZE_GUARD_OVERRIDE", "").lower() in _TRUTHY

    @staticmethod
    def get_default_mode() -> NumericMode:
        """Get default numeric mode.

        Returns:
            NumericMode from REFUEL_MODE, defaults to FAST

        Raises:
            EnvironmentVariableError: If the value is not a known mode
        """
        raw = os.environ.get("REFUEL_MODE", "fast").lower()
        try:
            return NumericMode(raw)
        except ValueError:
            raise EnvironmentVariableError("REFUEL_MODE", raw, [m.value for m in NumericMode]) from None

    @staticmethod
    def get_default_timeout() -> float:
        """Get default timeout in seconds (REFUEL_TIMEOUT, default 60)."""
        raw = os.environ.get("REFUEL_TIMEOUT", "60")
        try:
            value = float(raw)
        except ValueError:
            value = -1.0
        if value <= 0:
            raise EnvironmentVariableError("REFUEL_TIMEOUT", raw, ["positive number of seconds"])
        return value

    @staticmethod
    def get_default_workers() -> int:
        """Get default bench worker count (REFUEL_WORKERS, default 1)."""
        raw = os.environ.get("REFUEL_WORKERS", "1")
        if not raw.isdigit() or int(raw) < 1:
            raise EnvironmentVariableError("REFUEL_WORKERS", raw, ["integer >= 1"])
        return int(raw)

    @staticmethod
    def get_output_dir() -> Path:
        """Get default bench output directory."""
        if output_dir := os.environ.get("REFUEL_OUTPUT_DIR"):
            return Path(output_dir).resolve()
        return Path.cwd() / "bench-out"

    @staticmethod
    def dataset_defaults(kind: str, full_scale: bool = False) -> dict:
        """Get generation parameters for a named dataset.

        Args:
            kind: Dataset name (S1, S2 or S3)
            full_scale: Use the published configuration instead of desk scale

        Returns:
            Dict with scale, max_n, count and sigma_step
        """
        if full_scale:
            return dict(FULL_SCALE)
        return dict(DESK_DEFAULTS[kind])


@dataclass
class BenchProfile:
    """Benchmark settings loaded from a YAML profile."""

    algos: list[str] = field(default_factory=lambda: ["fast", "astar"])
    mode: NumericMode = NumericMode.FAST
    timeout_s: float = 60.0
    workers: int = 1
    prune: bool = False

    @classmethod
    def from_environment(cls) -> "BenchProfile":
        """Build a profile from environment defaults."""
        return cls(
            mode=RefuelConfig.get_default_mode(),
            timeout_s=RefuelConfig.get_default_timeout(),
            workers=RefuelConfig.get_default_workers(),
        )

    @classmethod
    def load(cls, path: Path) -> "BenchProfile":
        """Load a profile file on top of the environment defaults.

        Raises:
            InvalidConfigError: If the file cannot be parsed or holds invalid values
        """
        try:
            data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
        except (OSError, yaml.YAMLError) as e:
            raise InvalidConfigError(path, str(e)) from e
        if not isinstance(data, dict):
            raise InvalidConfigError(path, "top level must be a mapping")

        profile = cls.from_environment()
        if "algos" in data:
            algos = data["algos"]
            if not isinstance(algos, list) or not algos or any(a not in ALGORITHMS for a in algos):
                raise InvalidConfigError(path, f"algos must be a non-empty list drawn from {', '.join(ALGORITHMS)}")
            profile.algos = list(algos)
        if "mode" in data:
            try:
                profile.mode = NumericMode(str(data["mode"]).lower())
            except ValueError:
                raise InvalidConfigError(path, f"unknown mode '{data['mode']}'") from None
        if "timeout_s" in data:
            if not isinstance(data["timeout_s"], int | float) or data["timeout_s"] <= 0:
                raise InvalidConfigError(path, "timeout_s must be a positive number")
            profile.timeout_s = float(data["timeout_s"])
        if "workers" in data:
            if not isinstance(data["workers"], int) or data["workers"] < 1:
                raise InvalidConfigError(path, "workers must be an integer >= 1")
            profile.workers = data["workers"]
        if "prune" in data:
            profile.prune = bool(data["prune"])
        return profile
