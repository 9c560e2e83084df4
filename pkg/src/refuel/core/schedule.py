"""Schedule evaluation: φ, payoff, adjacent swap delta and the drop-out view.

The library maximizes Σ w_j / C_j, which is the same as minimizing the
scheduling cost Σ -w_j / C_j.
"""

from collections.abc import Sequence

from refuel.exceptions import MalformedPermutationError
from refuel.models.instance import Instance, Job, Number, NumericMode, Schedule


def phi(job: Job, t: Number, mode: NumericMode = NumericMode.FAST) -> Number:
    """Auxiliary function φ_j(t) = w / (p (p + t)); positive and strictly decreasing in t."""
    return mode.coerce(job.w) / (job.p * (job.p + mode.coerce(t)))


def check_permutation(order: Sequence[int], n: int) -> None:
    """Raise MalformedPermutationError unless order lists each of 0..n-1 exactly once."""
    seen: set[int] = set()
    for job_id in order:
        if not isinstance(job_id, int) or not 0 <= job_id < n:
            raise MalformedPermutationError(list(order), n, f"unknown job id {job_id!r}")
        if job_id in seen:
            raise MalformedPermutationError(list(order), n, f"duplicate job id {job_id}")
        seen.add(job_id)
    if len(seen) != n:
        missing = sorted(set(range(n)) - seen)
        raise MalformedPermutationError(list(order), n, f"missing job ids {missing}")


def start_times(instance: Instance, order: Sequence[int], base_time: Number = 0) -> dict[int, Number]:
    """Start time of every job when processed back to back from base_time."""
    starts: dict[int, Number] = {}
    t = base_time
    for job_id in order:
        starts[job_id] = t
        t += instance.jobs[job_id].p
    return starts


def build_schedule(
    instance: Instance,
    order: Sequence[int],
    base_time: Number = 0,
    mode: NumericMode = NumericMode.FAST,
) -> Schedule:
    """Evaluate an order into a Schedule with starts and payoff."""
    check_permutation(order, instance.n)
    starts = start_times(instance, order, base_time)
    payoff = sum(
        (mode.coerce(instance.jobs[j].w) / (mode.coerce(starts[j]) + instance.jobs[j].p) for j in order),
        mode.coerce(0),
    )
    return Schedule(tuple(order), starts, payoff, base_time)


def schedule_payoff(
    instance: Instance,
    order: Sequence[int],
    base_time: Number = 0,
    mode: NumericMode = NumericMode.FAST,
) -> Number:
    """Σ w_j / (t_j + p_j) of an order started at base_time; larger is better.

    Raises:
        MalformedPermutationError: If order is not a permutation of the job ids
    """
    return build_schedule(instance, order, base_time, mode).payoff


def swap_delta(i: Job, j: Job, t: Number, mode: NumericMode = NumericMode.FAST) -> Number:
    """Payoff of ...i j... minus payoff of ...j i... for the adjacent pair starting at t.

    Equals p_i p_j / (p_i + p_j + t) · (φ_i(t) - φ_j(t)), so its sign is the sign
    of φ_i(t) - φ_j(t).
    """
    t = mode.coerce(t)
    factor = mode.coerce(i.p * j.p) / (i.p + j.p + t)
    return factor * (phi(i, t, mode) - phi(j, t, mode))


def to_dropout_order(order: Sequence[int]) -> list[int]:
    """Reverse a processing order into the order in which airplanes leave the fleet."""
    return list(reversed(order))
