"""Greedy construction of one potential schedule."""

from refuel.core.schedule import schedule_payoff
from refuel.dominance.rules import RelationTable, outranks
from refuel.models.instance import Instance, Number, NumericMode
from refuel.models.report import SolveReport
from refuel.utils.profiler import measure_time


def greedy_potential(instance: Instance, t: Number = 0, mode: NumericMode = NumericMode.FAST) -> list[int]:
    """Repeatedly run the unscheduled job with the largest φ at the current time.

    Ties go to the larger φ at the end of the remaining work, then to the
    smaller id, the same rule that picks the solver's pivot.
    """
    table = RelationTable(instance.jobs, mode)
    remaining = [job.id for job in instance.jobs]
    order: list[int] = []
    now = mode.coerce(t)
    end = now + instance.T
    while remaining:
        best = remaining[0]
        for job_id in remaining[1:]:
            if outranks(table, job_id, best, now, end):
                best = job_id
        order.append(best)
        remaining.remove(best)
        now += instance.jobs[best].p
    return order


def greedy_report(instance: Instance, mode: NumericMode = NumericMode.FAST) -> SolveReport:
    """greedy_potential from time 0 wrapped as a solve result."""
    with measure_time("greedy") as watch:
        order = greedy_potential(instance, 0, mode)
        payoff = schedule_payoff(instance, order, 0, mode)
    return SolveReport("greedy", mode, payoff, order, nodes=instance.n, elapsed=watch.elapsed)
