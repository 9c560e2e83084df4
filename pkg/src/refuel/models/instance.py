"""Problem data models: jobs, instances, schedules and numeric modes."""

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from refuel.exceptions import InvalidInstanceError

Number = float | Fraction


class NumericMode(Enum):
    """Arithmetic used for payoffs and dominance comparisons.

    FAST evaluates in binary64 floating point. EXACT uses rationals; a float
    weight is read as the exact rational value of its binary representation.
    """

    FAST = "fast"
    EXACT = "exact"

    def coerce(self, value: int | float | Fraction) -> Number:
        """Convert a number into this mode's arithmetic."""
        if self is NumericMode.EXACT:
            return Fraction(value)
        return float(value)


@dataclass(frozen=True, slots=True)
class Job:
    """One airplane / job: processing time (consumption rate) and weight (tank volume)."""

    id: int
    p: int
    w: float

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int) or self.p < 1:
            raise InvalidInstanceError(f"job {self.id}: p must be a positive integer, got {self.p!r}")
        if isinstance(self.w, bool) or not isinstance(self.w, int | float) or not math.isfinite(self.w) or self.w <= 0:
            raise InvalidInstanceError(f"job {self.id}: w must be positive and finite, got {self.w!r}")


@dataclass(frozen=True)
class InstanceMeta:
    """Generation parameters recorded alongside an instance."""

    n: int
    sigma: float
    seed: int
    index: int = 0


@dataclass(frozen=True)
class Instance:
    """A job set processed from time 0 on a single machine."""

    jobs: tuple[Job, ...]
    meta: InstanceMeta | None = None
    T: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "jobs", tuple(self.jobs))
        ids = [job.id for job in self.jobs]
        if sorted(ids) != list(range(len(ids))):
            raise InvalidInstanceError(f"job ids must be exactly 0..{len(ids) - 1}, got {sorted(ids)}")
        # Positional lookup by id.
        object.__setattr__(self, "jobs", tuple(sorted(self.jobs, key=lambda job: job.id)))
        object.__setattr__(self, "T", sum(job.p for job in self.jobs))

    @classmethod
    def from_pairs(cls, pairs: list[tuple[int, float]], meta: InstanceMeta | None = None) -> "Instance":
        """Build an instance from (p, w) pairs; ids follow list position."""
        return cls(tuple(Job(i, p, w) for i, (p, w) in enumerate(pairs)), meta)

    @property
    def n(self) -> int:
        return len(self.jobs)

    def job(self, job_id: int) -> Job:
        return self.jobs[job_id]

    def check_horizon(self) -> bool:
        """Recompute T from the jobs and compare with the cached value."""
        return self.T == sum(job.p for job in self.jobs)

    def scaled(self, factor: float) -> "Instance":
        """Copy with every weight multiplied by factor."""
        return Instance(tuple(Job(job.id, job.p, job.w * factor) for job in self.jobs), self.meta)


@dataclass(frozen=True)
class Schedule:
    """A processing order with derived start times and payoff."""

    order: tuple[int, ...]
    starts: dict[int, int]
    payoff: Number
    base_time: int = 0

    def completion(self, job: Job) -> int:
        return self.starts[job.id] + job.p
