"""Dominance data models: pair relations, banned intervals, cut grids, violations."""

from bisect import bisect_right
from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import Enum

from refuel.models.instance import Number


class RelationKind(Enum):
    """How φ of two jobs compare over [0, ∞)."""

    FIRST_DOMINATES = "first-dominates"
    SECOND_DOMINATES = "second-dominates"
    CROSSOVER = "crossover"
    EQUIVALENT = "equivalent"


@dataclass(frozen=True, slots=True)
class PairRelation:
    """Classification of the ordered pair (first, second).

    The sign of D(t) = c + s·t is the sign of φ_first(t) - φ_second(t).
    For CROSSOVER, dominant_before rules on [0, tstar) and the other job on [tstar, ∞).
    """

    kind: RelationKind
    first: int
    second: int
    c: Number
    s: Number
    tstar: Number | None = None
    dominant_before: int | None = None

    @property
    def other(self) -> int | None:
        """The job ruling from tstar on, for crossovers."""
        if self.kind is not RelationKind.CROSSOVER:
            return None
        return self.second if self.dominant_before == self.first else self.first

    def mirrored(self) -> "PairRelation":
        """The same relation seen from (second, first)."""
        kind = {
            RelationKind.FIRST_DOMINATES: RelationKind.SECOND_DOMINATES,
            RelationKind.SECOND_DOMINATES: RelationKind.FIRST_DOMINATES,
        }.get(self.kind, self.kind)
        return PairRelation(kind, self.second, self.first, -self.c, -self.s, self.tstar, self.dominant_before)

    def ruler_at(self, t: Number) -> int | None:
        """Id of the job whose φ rules at time t (half-open regions), None if equivalent."""
        if self.kind is RelationKind.FIRST_DOMINATES:
            return self.first
        if self.kind is RelationKind.SECOND_DOMINATES:
            return self.second
        if self.kind is RelationKind.CROSSOVER:
            return self.dominant_before if t < self.tstar else self.other
        return None


@dataclass(frozen=True)
class BannedSet:
    """Normalized union of half-open intervals in which `owner` may not start."""

    owner: int
    intervals: tuple[tuple[Number, Number], ...] = ()

    @classmethod
    def from_intervals(cls, owner: int, intervals: list[tuple[Number, Number]]) -> "BannedSet":
        """Sort and merge overlapping or touching intervals."""
        merged: list[list[Number]] = []
        for lo, hi in sorted(intervals):
            if lo >= hi:
                continue
            if merged and lo <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], hi)
            else:
                merged.append([lo, hi])
        return cls(owner, tuple((lo, hi) for lo, hi in merged))

    def __contains__(self, t: Number) -> bool:
        pos = bisect_right(self.intervals, t, key=lambda interval: interval[0]) - 1
        return pos >= 0 and t < self.intervals[pos][1]

    def __len__(self) -> int:
        return len(self.intervals)


@dataclass(frozen=True)
class CutGrid:
    """Cut points c_1 = t_o < ... < c_m = t_e for pivot `alpha` and each job's rank.

    A job of rank r precedes alpha whenever alpha starts in [c_q, c_q+1) with r <= q.
    """

    alpha: int
    t_o: Number
    t_e: Number
    cuts: tuple[Number, ...]
    rank_of: dict[int, int] = field(default_factory=dict)

    def subintervals(self) -> Iterator[tuple[int, Number, Number]]:
        """Yield (q, c_q, c_q+1) with 1-based q."""
        for q in range(1, len(self.cuts)):
            yield q, self.cuts[q - 1], self.cuts[q]


class ViolationReason(Enum):
    """Why an ordered pair breaks a dominance relation."""

    GLOBAL_DOMINANCE = "global-dominance"
    CROSSOVER_LATE_START = "crossover-late-start"
    CROSSOVER_EARLY_WINDOW = "crossover-early-window"


@dataclass(frozen=True, slots=True)
class Violation:
    """Job `earlier` runs before job `later` against a dominance relation."""

    earlier: int
    later: int
    reason: ViolationReason

    def to_dict(self) -> dict:
        return {"earlier": self.earlier, "later": self.later, "reason": self.reason.value}


@dataclass
class ValidationResult:
    """Outcome of checking an order against every pair relation."""

    violations: list[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"valid": self.valid, "violations": [v.to_dict() for v in self.violations]}
