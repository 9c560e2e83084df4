"""Instance generation models."""

from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from refuel.exceptions import InvalidConfigError


class DatasetKind(Enum):
    """Named experiment datasets plus an explicit list of specs."""

    S1 = "S1"
    S2 = "S2"
    S3 = "S3"
    CUSTOM = "custom"


@dataclass(frozen=True)
class GenSpec:
    """One random configuration: n jobs, weight spread sigma, `count` instances."""

    n: int
    sigma: float
    seed: int
    count: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise InvalidConfigError(None, f"n must be >= 1, got {self.n}")
        if self.sigma < 0:
            raise InvalidConfigError(None, f"sigma must be >= 0, got {self.sigma}")
        if self.seed < 0:
            raise InvalidConfigError(None, f"seed must be >= 0, got {self.seed}")
        if self.count < 1:
            raise InvalidConfigError(None, f"count must be >= 1, got {self.count}")


@dataclass(frozen=True)
class ManifestEntry:
    """One generated file as listed in a dataset manifest."""

    n: int
    sigma: float
    seed: int
    index: int
    path: Path
