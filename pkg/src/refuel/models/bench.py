"""Benchmark record and report models."""

from dataclasses import dataclass, field
from enum import Enum

CSV_HEADER = ["instance", "n", "sigma", "seed", "algo", "mode", "elapsed_s", "payoff", "leaves", "nodes", "status"]


class BenchStatus(Enum):
    """Outcome of one (instance, algo) run."""

    OK = "ok"
    TIMEOUT = "timeout"
    SKIPPED = "skipped"


@dataclass
class BenchRecord:
    """One timed (instance, algo) run.

    payoff is present iff status is OK; leaves only for the recursive solver.
    note carries the reason for skipped records and is not part of the CSV.
    """

    instance: str
    n: int
    sigma: float
    seed: int
    algo: str
    mode: str
    elapsed: float
    status: BenchStatus
    payoff: float | None = None
    leaves: int | None = None
    nodes: int | None = None
    note: str = ""

    def to_row(self) -> list[str]:
        return [
            self.instance,
            str(self.n),
            repr(self.sigma),
            str(self.seed),
            self.algo,
            self.mode,
            repr(self.elapsed),
            "" if self.payoff is None else repr(self.payoff),
            "" if self.leaves is None else str(self.leaves),
            "" if self.nodes is None else str(self.nodes),
            self.status.value,
        ]


@dataclass(frozen=True)
class SpeedupRow:
    """Per-size comparison of A* against the recursive solver."""

    n: int
    instances: int
    mean_fast_s: float
    mean_astar_s: float
    ratio: float


@dataclass
class SpeedupReport:
    """Rows by size plus the number of instances dropped for timeouts."""

    rows: list[SpeedupRow] = field(default_factory=list)
    excluded: int = 0

    @property
    def empty(self) -> bool:
        return not self.rows


@dataclass(frozen=True)
class HardnessRow:
    """One solved instance: sigma, potential schedule count K and solve time."""

    instance: str
    sigma: float
    leaves: int
    elapsed: float


@dataclass
class HardnessReport:
    """Rows plus the rank correlation of log K and log elapsed.

    correlation is None when omitted (fewer than 3 rows) or undefined
    (one side constant); `marker` says which.
    """

    rows: list[HardnessRow] = field(default_factory=list)
    correlation: float | None = None
    marker: str = ""


@dataclass(frozen=True)
class Table1Row:
    """Solve time aggregates for one (n, sigma band) cell."""

    n: int
    band_lo: float
    band_hi: float
    instances: int
    solved: int
    avg_s: float | None
    std_s: float | None

    @property
    def percent_solved(self) -> float:
        return 100.0 * self.solved / self.instances if self.instances else 0.0
