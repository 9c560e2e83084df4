"""Timed runs of every (instance, algorithm) pair of a manifest."""

from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from refuel.baselines import astar, brute_force, greedy_report
from refuel.exceptions import InstanceFileError, SizeGuardError, SolveTimeoutError
from refuel.models.bench import BenchRecord, BenchStatus
from refuel.models.generation import ManifestEntry
from refuel.models.instance import Instance, NumericMode
from refuel.models.report import SolveReport
from refuel.solver import solve_instance
from refuel.state.instance_store import InstanceStore


def solve_with(
    algo: str,
    instance: Instance,
    mode: NumericMode = NumericMode.FAST,
    timeout_s: float | None = None,
    prune: bool = False,
    override: bool = False,
) -> SolveReport:
    """Run one algorithm by name.

    Raises:
        ValueError: If algo is unknown
        SizeGuardError: If an exhaustive algorithm refuses the instance
        SolveTimeoutError: If timeout_s elapses first
    """
    if algo == "fast":
        return solve_instance(instance, mode, prune, timeout_s)
    if algo == "astar":
        return astar(instance, mode, prune, override, timeout_s)
    if algo == "brute":
        return brute_force(instance, mode, override, timeout_s)
    if algo == "greedy":
        return greedy_report(instance, mode)
    raise ValueError(f"unknown algorithm '{algo}'")


@dataclass(frozen=True)
class BenchTask:
    """One unit of work; picklable for worker processes."""

    entry: ManifestEntry
    algo: str
    mode: NumericMode
    timeout_s: float
    prune: bool = False
    override: bool = False


def run_task(task: BenchTask) -> BenchRecord:
    """Load, solve and record one pair. Failures become timeout or skipped records."""
    entry = task.entry

    def record(status: BenchStatus, elapsed: float = 0.0, note: str = "", **solved) -> BenchRecord:
        return BenchRecord(
            instance=entry.path.as_posix(),
            n=entry.n,
            sigma=entry.sigma,
            seed=entry.seed,
            algo=task.algo,
            mode=task.mode.value,
            elapsed=elapsed,
            status=status,
            note=note,
            **solved,
        )

    try:
        instance = InstanceStore(entry.path).load()
    except InstanceFileError as e:
        return record(BenchStatus.SKIPPED, note=e.message)
    try:
        report = solve_with(task.algo, instance, task.mode, task.timeout_s, task.prune, task.override)
    except SizeGuardError as e:
        return record(BenchStatus.SKIPPED, note=e.message)
    except SolveTimeoutError as e:
        return record(BenchStatus.TIMEOUT, task.timeout_s, note=f"{e.nodes} nodes")
    # The deadline is checked every few hundred nodes, so a run can finish just past it.
    if report.elapsed > task.timeout_s:
        return record(BenchStatus.TIMEOUT, report.elapsed, note=f"{report.nodes} nodes")
    return record(
        BenchStatus.OK,
        report.elapsed,
        payoff=float(report.payoff),
        leaves=report.leaves if task.algo == "fast" else None,
        nodes=report.nodes,
    )


def run_bench(
    entries: list[ManifestEntry],
    algos: list[str],
    timeout_s: float,
    mode: NumericMode = NumericMode.FAST,
    workers: int = 1,
    prune: bool = False,
    override: bool = False,
    on_record: Callable[[BenchRecord], None] | None = None,
) -> list[BenchRecord]:
    """Run every algorithm on every manifest entry.

    Records come back in manifest order, then algorithm order, whatever the
    number of worker processes. override lifts the brute force and A* size guards.
    """
    tasks = [BenchTask(entry, algo, mode, timeout_s, prune, override) for entry in entries for algo in algos]
    if workers <= 1:
        return _collect(map(run_task, tasks), on_record)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return _collect(executor.map(run_task, tasks), on_record)


def _collect(results: Iterable[BenchRecord], on_record: Callable[[BenchRecord], None] | None) -> list[BenchRecord]:
    records = []
    for result in results:
        records.append(result)
        if on_record is not None:
            on_record(result)
    return records
