"""Timing utilities: operation timings, stopwatches and cooperative deadlines."""

import time
from collections.abc import Iterator
from contextlib import contextmanager

from rich.console import Console

from refuel.config import RefuelConfig

console = Console(stderr=True)


class PerformanceTracker:
    """Collect timings per operation name while debug mode is on."""

    def __init__(self):
        self.timings: dict[str, list[float]] = {}
        self.enabled = RefuelConfig.is_debug_enabled()

    def record(self, operation: str, duration: float) -> None:
        if not self.enabled:
            return
        self.timings.setdefault(operation, []).append(duration)

    def get_stats(self, operation: str) -> dict[str, float]:
        """Min, max, avg, total and count for an operation."""
        timings = self.timings.get(operation)
        if not timings:
            return {"min": 0.0, "max": 0.0, "avg": 0.0, "total": 0.0, "count": 0}
        return {
            "min": min(timings),
            "max": max(timings),
            "avg": sum(timings) / len(timings),
            "total": sum(timings),
            "count": len(timings),
        }

    def clear(self) -> None:
        self.timings.clear()


_perf_tracker = PerformanceTracker()


class Stopwatch:
    """Wall-clock timer started on construction."""

    def __init__(self):
        self.start = time.perf_counter()

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.start


class Deadline:
    """Cooperative timeout checked by solvers every `check_every` units of work.

    Only every check_every-th call to tick() reads the clock, so a solver may
    overshoot the timeout by the time of that many nodes.
    """

    def __init__(self, timeout_s: float | None, check_every: int = 256):
        self.timeout_s = timeout_s
        self.check_every = check_every
        self._stopwatch = Stopwatch()
        self._ticks = 0

    def tick(self) -> bool:
        """Count one unit of work; True once the deadline has passed."""
        if self.timeout_s is None:
            return False
        self._ticks += 1
        if self._ticks % self.check_every:
            return False
        return self._stopwatch.elapsed > self.timeout_s

    def expired(self) -> bool:
        return self.timeout_s is not None and self._stopwatch.elapsed > self.timeout_s


@contextmanager
def measure_time(operation: str) -> Iterator[Stopwatch]:
    """Time a block; debug mode records and prints the duration.

    Usage:
        with measure_time("solve") as watch:
            ...
        watch.elapsed
    """
    watch = Stopwatch()
    try:
        yield watch
    finally:
        duration = watch.elapsed
        _perf_tracker.record(operation, duration)
        if RefuelConfig.is_debug_enabled():
            console.print(f"[dim]{operation}: {duration:.4f}s[/dim]")


def get_performance_stats() -> dict[str, dict[str, float]]:
    """All recorded operation statistics."""
    return {op: _perf_tracker.get_stats(op) for op in _perf_tracker.timings}
