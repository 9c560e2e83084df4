"""Exhaustive oracles: best permutation and potential-schedule count."""

from refuel.baselines._guards import BRUTE_FORCE_LIMIT, check_size
from refuel.dominance.rules import RelationTable
from refuel.dominance.validator import pair_violation
from refuel.exceptions import SolveTimeoutError
from refuel.models.instance import Instance, Number, NumericMode
from refuel.models.report import SolveReport
from refuel.utils.profiler import Deadline, measure_time


def brute_force(
    instance: Instance,
    mode: NumericMode = NumericMode.FAST,
    override: bool = False,
    timeout_s: float | None = None,
) -> SolveReport:
    """Evaluate all n! orders and keep the best.

    Orders are visited in lexicographic order and only a strictly better
    payoff replaces the incumbent, so ties resolve to the lexicographically
    smallest maximizing order. Prefix sums are shared between orders.

    Raises:
        SizeGuardError: If n > 10 without override
        SolveTimeoutError: If timeout_s elapses first
    """
    check_size("brute", instance.n, BRUTE_FORCE_LIMIT, override)
    jobs = instance.jobs
    weights = [mode.coerce(job.w) for job in jobs]
    deadline = Deadline(timeout_s)
    best_payoff: Number | None = None
    best_order: list[int] = []
    prefix: list[int] = []
    used = [False] * instance.n
    nodes = 0

    def extend(t: int, payoff: Number) -> None:
        nonlocal best_payoff, best_order, nodes
        nodes += 1
        if deadline.tick():
            raise SolveTimeoutError("brute", timeout_s, nodes)
        if len(prefix) == instance.n:
            if best_payoff is None or payoff > best_payoff:
                best_payoff, best_order = payoff, list(prefix)
            return
        for job in jobs:
            if used[job.id]:
                continue
            used[job.id] = True
            prefix.append(job.id)
            extend(t + job.p, payoff + weights[job.id] / (t + job.p))
            prefix.pop()
            used[job.id] = False

    with measure_time("brute_force") as watch:
        extend(0, mode.coerce(0))
    return SolveReport("brute", mode, best_payoff, best_order, nodes=nodes, elapsed=watch.elapsed)


def count_potential_brute(
    instance: Instance,
    mode: NumericMode = NumericMode.FAST,
    override: bool = False,
) -> int:
    """Number of permutations that violate no dominance relation.

    A violation only involves the two jobs of a pair and their start times,
    so a prefix that already violates one is abandoned with all its
    completions.

    Raises:
        SizeGuardError: If n > 10 without override
    """
    check_size("count", instance.n, BRUTE_FORCE_LIMIT, override)
    table = RelationTable(instance.jobs, mode)
    placed: list[tuple[int, int]] = []
    used = [False] * instance.n

    def extend(t: int) -> int:
        if len(placed) == instance.n:
            return 1
        total = 0
        for job in instance.jobs:
            if used[job.id]:
                continue
            if any(
                pair_violation(table.get(i, job.id), t_i, t, instance.jobs[i].p) is not None
                for i, t_i in placed
            ):
                continue
            used[job.id] = True
            placed.append((job.id, t))
            total += extend(t + job.p)
            placed.pop()
            used[job.id] = False
        return total

    return extend(0)
