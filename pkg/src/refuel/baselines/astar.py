"""Best-first search over the subset graph.

A vertex is the set of already scheduled jobs; an arc appends one more job.
Since the time elapsed is fixed by the set, the best payoff per set is all
that needs to be kept.
"""

import heapq
from dataclasses import dataclass

from refuel.baselines._guards import ASTAR_LIMIT, check_size
from refuel.dominance.rules import RelationTable
from refuel.exceptions import SolveTimeoutError
from refuel.models.instance import Instance, Number, NumericMode
from refuel.models.report import SolveReport
from refuel.utils.profiler import Deadline, measure_time


@dataclass(frozen=True, slots=True)
class AStarState:
    """A scheduled subset as a bitmask, its prefix payoff g and elapsed time t."""

    scheduled: int
    g: Number
    t: int

    def contains(self, job_id: int) -> bool:
        return bool(self.scheduled >> job_id & 1)


def remaining_bound(instance: Instance, state: AStarState, mode: NumericMode) -> Number:
    """h(S) = Σ over unscheduled j of w_j / (t_S + p_j).

    Every unscheduled job completes no earlier than t_S + p_j, so h never
    underestimates the payoff still to come and never grows along an arc.
    """
    return sum(
        (mode.coerce(job.w) / (state.t + job.p) for job in instance.jobs if not state.contains(job.id)),
        mode.coerce(0),
    )


def _dominated(table: RelationTable, job_id: int, unscheduled: list[int], t: int, horizon: int) -> bool:
    """Some unscheduled k has φ_k > φ_j on all of [t, horizon]."""
    return any(
        k != job_id and table.diff_sign(k, job_id, t) > 0 and table.diff_sign(k, job_id, horizon) > 0
        for k in unscheduled
    )


def astar(
    instance: Instance,
    mode: NumericMode = NumericMode.FAST,
    prune: bool = False,
    override: bool = False,
    timeout_s: float | None = None,
) -> SolveReport:
    """Maximum-payoff order by A* over job subsets.

    nodes counts expanded subsets. With prune enabled, appending j at time t
    is skipped when another unscheduled job beats j's φ over the whole rest
    of the horizon; such a placement is never optimal.

    Raises:
        SizeGuardError: If n > 30 without override
        SolveTimeoutError: If timeout_s elapses first
    """
    check_size("astar", instance.n, ASTAR_LIMIT, override)
    n = instance.n
    full = (1 << n) - 1
    table = RelationTable(instance.jobs, mode) if prune else None
    deadline = Deadline(timeout_s)
    zero = mode.coerce(0)

    with measure_time("astar") as watch:
        start = AStarState(0, zero, 0)
        best_g: dict[int, Number] = {0: zero}
        parent: dict[int, tuple[int, int]] = {}
        closed: set[int] = set()
        counter = 0
        heap: list[tuple[Number, int, AStarState]] = [(-remaining_bound(instance, start, mode), counter, start)]
        nodes = 0
        goal: AStarState | None = None

        while heap:
            _, _, state = heapq.heappop(heap)
            if state.scheduled in closed or state.g < best_g[state.scheduled]:
                continue
            if state.scheduled == full:
                goal = state
                break
            closed.add(state.scheduled)
            nodes += 1
            if deadline.tick():
                raise SolveTimeoutError("astar", timeout_s, nodes)

            unscheduled = [job.id for job in instance.jobs if not state.contains(job.id)]
            for job_id in unscheduled:
                if table is not None and _dominated(table, job_id, unscheduled, state.t, instance.T):
                    continue
                job = instance.jobs[job_id]
                mask = state.scheduled | 1 << job_id
                if mask in closed:
                    continue
                g = state.g + mode.coerce(job.w) / (state.t + job.p)
                if mask in best_g and g <= best_g[mask]:
                    continue
                best_g[mask] = g
                parent[mask] = (state.scheduled, job_id)
                child = AStarState(mask, g, state.t + job.p)
                counter += 1
                heapq.heappush(heap, (-(g + remaining_bound(instance, child, mode)), counter, child))

    assert goal is not None, "the subset graph always reaches the full set"
    order: list[int] = []
    mask = full
    while mask:
        mask, job_id = parent[mask]
        order.append(job_id)
    order.reverse()
    return SolveReport("astar", mode, goal.g, order, nodes=nodes, elapsed=watch.elapsed)
