"""Recursive enumeration of potential schedules around a pivot job.

A window is a set of jobs processed back to back from time t. The pivot α
is the window job with the largest φ(t). Its crossover cuts split the window
into subintervals; for each subinterval the jobs whose cut has already been
passed run before α, everything else after it. Each accepted branch splits
the window into two independent sub-windows that are solved recursively.
"""

import sys
from collections.abc import Callable, Iterator, Sequence
from contextlib import contextmanager
from dataclasses import dataclass

from refuel.dominance.intervals import banned_set, cut_grid
from refuel.dominance.rules import RelationTable, outranks
from refuel.exceptions import EmptyWindowError, InvalidInstanceError, SolveTimeoutError
from refuel.models.instance import Instance, Job, Number, NumericMode
from refuel.models.report import SolveReport
from refuel.utils.profiler import Deadline, measure_time


@dataclass(frozen=True)
class Branch:
    """One accepted placement of the pivot inside a window."""

    q: int
    alpha: Job
    t_alpha: Number
    left: list[Job]
    right: list[Job]

    @property
    def right_start(self) -> Number:
        return self.t_alpha + self.alpha.p


@contextmanager
def recursion_headroom(n: int) -> Iterator[None]:
    """Raise the interpreter recursion limit for a window of n jobs, restoring it on exit."""
    previous = sys.getrecursionlimit()
    needed = 4 * n + 200
    if previous < needed:
        sys.setrecursionlimit(needed)
    try:
        yield
    finally:
        sys.setrecursionlimit(previous)


@dataclass
class _Partial:
    payoff: Number
    order: list[int]
    leaves: int


def select_alpha(
    window_jobs: Sequence[Job],
    t_o: Number,
    t_e: Number,
    mode: NumericMode = NumericMode.FAST,
    table: RelationTable | None = None,
) -> Job:
    """Job with maximum φ(t_o); ties by maximum φ(t_e), then smallest id.

    Raises:
        EmptyWindowError: If window_jobs is empty
    """
    if not window_jobs:
        raise EmptyWindowError()
    table = table if table is not None else RelationTable(window_jobs, mode)
    best = window_jobs[0]
    for job in window_jobs[1:]:
        if outranks(table, job.id, best.id, t_o, t_e):
            best = job
    return best


class FastScheduler:
    """Recursion state shared by one solve or enumeration call.

    Counters are per instance: nodes counts recursive calls, branches counts
    accepted pivot placements.
    """

    def __init__(
        self,
        jobs: Sequence[Job],
        mode: NumericMode = NumericMode.FAST,
        prune: bool = False,
        deadline: Deadline | None = None,
    ):
        ids = [job.id for job in jobs]
        if len(set(ids)) != len(ids):
            raise InvalidInstanceError(f"window job ids must be distinct, got {sorted(ids)}")
        self.mode = mode
        self.prune = prune
        self.deadline = deadline
        self.table = RelationTable(jobs, mode)
        self.nodes = 0
        self.branches = 0

    def _enter(self) -> None:
        self.nodes += 1
        if self.deadline is not None and self.deadline.tick():
            raise SolveTimeoutError("fast", self.deadline.timeout_s, self.nodes)

    def iter_branches(self, window: Sequence[Job], t: Number) -> Iterator[Branch]:
        """Accepted pivot placements of a window with at least two jobs, in q order."""
        t_e = t + sum(job.p for job in window)
        alpha = select_alpha(window, t, t_e, self.mode, self.table)
        others = [job for job in window if job.id != alpha.id]
        grid = cut_grid(alpha, window, t, t_e, self.mode, self.table)
        banned = banned_set(alpha, others, self.mode, table=self.table)

        last_cut = len(grid.cuts)
        passing = sorted(
            (job for job in others if grid.rank_of[job.id] <= last_cut),
            key=lambda job: (grid.rank_of[job.id], job.id),
        )
        passed = 0
        prefix = 0
        for q, lo, hi in grid.subintervals():
            while passed < len(passing) and grid.rank_of[passing[passed].id] <= q:
                prefix += passing[passed].p
                passed += 1
            t_alpha = t + prefix
            if not lo <= t_alpha < hi or t_alpha in banned:
                continue
            before = {job.id for job in passing[:passed]}
            yield Branch(
                q,
                alpha,
                t_alpha,
                [job for job in others if job.id in before],
                [job for job in others if job.id not in before],
            )

    def _upper_bound(self, jobs: Sequence[Job], t: Number) -> Number:
        # Every job of the window completes no earlier than t + p.
        return sum((self.mode.coerce(job.w) / (t + job.p) for job in jobs), self.mode.coerce(0))

    def solve(self, window: Sequence[Job], t: Number) -> _Partial:
        """Best order of a window started at t and its potential-schedule count."""
        self._enter()
        t = self.mode.coerce(t)
        if not window:
            return _Partial(self.mode.coerce(0), [], 1)
        if len(window) == 1:
            job = window[0]
            return _Partial(self.mode.coerce(job.w) / (job.p + t), [job.id], 1)

        best: _Partial | None = None
        leaves = 0
        for branch in self.iter_branches(window, t):
            self.branches += 1
            head = self.mode.coerce(branch.alpha.w) / branch.right_start
            if self.prune and best is not None:
                bound = self._upper_bound(branch.left, t) + head + self._upper_bound(branch.right, branch.right_start)
                if bound <= best.payoff:
                    continue
            left = self.solve(branch.left, t)
            right = self.solve(branch.right, branch.right_start)
            assert left.leaves >= 1 and right.leaves >= 1
            leaves += left.leaves * right.leaves
            payoff = left.payoff + head + right.payoff
            if best is None or payoff > best.payoff:
                best = _Partial(payoff, [*left.order, branch.alpha.id, *right.order], 0)
        assert best is not None, "the first subinterval always accepts the pivot"
        best.leaves = leaves
        return best

    def iter_orders(self, window: Sequence[Job], t: Number) -> Iterator[list[int]]:
        """Every potential order of a window started at t."""
        self._enter()
        t = self.mode.coerce(t)
        if len(window) <= 1:
            yield [job.id for job in window]
            return
        for branch in self.iter_branches(window, t):
            self.branches += 1
            for left in self.iter_orders(branch.left, t):
                for right in self.iter_orders(branch.right, branch.right_start):
                    yield [*left, branch.alpha.id, *right]


def fast_schedule(
    window_jobs: Sequence[Job],
    t: Number = 0,
    mode: NumericMode = NumericMode.FAST,
    prune: bool = False,
    timeout_s: float | None = None,
) -> SolveReport:
    """Maximum-payoff potential schedule of window_jobs started at time t.

    With prune enabled, branches whose optimistic bound cannot beat the best
    payoff found so far are skipped; payoff and order are unchanged but leaves
    then only counts the explored branches.

    Raises:
        InvalidInstanceError: If two jobs share an id
        SolveTimeoutError: If timeout_s elapses before the recursion finishes
    """
    window = sorted(window_jobs, key=lambda job: job.id)
    with measure_time("fast_schedule") as watch, recursion_headroom(len(window)):
        scheduler = FastScheduler(window, mode, prune, Deadline(timeout_s))
        result = scheduler.solve(window, t)
    return SolveReport(
        algo="fast",
        mode=mode,
        payoff=result.payoff,
        order=result.order,
        leaves=result.leaves,
        branches=scheduler.branches,
        nodes=scheduler.nodes,
        elapsed=watch.elapsed,
    )


def solve_instance(
    instance: Instance,
    mode: NumericMode = NumericMode.FAST,
    prune: bool = False,
    timeout_s: float | None = None,
) -> SolveReport:
    """fast_schedule over a whole instance from time 0."""
    return fast_schedule(instance.jobs, 0, mode, prune, timeout_s)


def iter_potential(
    window_jobs: Sequence[Job],
    t: Number = 0,
    mode: NumericMode = NumericMode.FAST,
) -> Iterator[list[int]]:
    """Lazily yield every order enumerated by the recursion."""
    window = sorted(window_jobs, key=lambda job: job.id)
    with recursion_headroom(len(window)):
        yield from FastScheduler(window, mode).iter_orders(window, t)


def enumerate_potential(
    window_jobs: Sequence[Job],
    t: Number = 0,
    visitor: Callable[[list[int]], None] | None = None,
    mode: NumericMode = NumericMode.FAST,
) -> int:
    """Pass every enumerated order to visitor and return how many there were."""
    count = 0
    for order in iter_potential(window_jobs, t, mode):
        if visitor is not None:
            visitor(order)
        count += 1
    return count
