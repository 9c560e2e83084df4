"""Tests for stopwatches, deadlines and timing records."""

from refuel.utils.profiler import Deadline, PerformanceTracker, Stopwatch, measure_time


class FakeClock:
    def __init__(self):
        self.now = 100.0

    def __call__(self):
        return self.now


def test_stopwatch(mocker):
    clock = FakeClock()
    mocker.patch("refuel.utils.profiler.time.perf_counter", clock)
    watch = Stopwatch()
    clock.now += 1.5
    assert watch.elapsed == 1.5


class TestDeadline:
    def test_no_timeout_never_expires(self):
        deadline = Deadline(None)
        assert not any(deadline.tick() for _ in range(1000))
        assert not deadline.expired()

    def test_clock_read_every_check(self, mocker):
        clock = FakeClock()
        mocker.patch("refuel.utils.profiler.time.perf_counter", clock)
        deadline = Deadline(1.0, check_every=4)
        clock.now += 2.0
        assert deadline.expired()
        assert [deadline.tick() for _ in range(8)] == [False, False, False, True] * 2

    def test_not_expired_within_budget(self, mocker):
        clock = FakeClock()
        mocker.patch("refuel.utils.profiler.time.perf_counter", clock)
        deadline = Deadline(1.0, check_every=1)
        clock.now += 0.5
        assert not deadline.tick()


class TestPerformanceTracker:
    def test_disabled_by_default(self, monkeypatch):
        monkeypatch.delenv("REFUEL_DEBUG", raising=False)
        tracker = PerformanceTracker()
        tracker.record("solve", 1.0)
        assert tracker.get_stats("solve")["count"] == 0

    def test_stats(self, monkeypatch):
        monkeypatch.setenv("REFUEL_DEBUG", "true")
        tracker = PerformanceTracker()
        for duration in (1.0, 2.0, 3.0):
            tracker.record("solve", duration)
        assert tracker.get_stats("solve") == {"min": 1.0, "max": 3.0, "avg": 2.0, "total": 6.0, "count": 3}
        tracker.clear()
        assert tracker.timings == {}


def test_measure_time_yields_stopwatch():
    with measure_time("block") as watch:
        pass
    assert watch.elapsed >= 0.0


def test_measure_time_records_when_enabled(monkeypatch):
    from refuel.utils import profiler

    monkeypatch.setattr(profiler._perf_tracker, "enabled", True)
    monkeypatch.setattr(profiler._perf_tracker, "timings", {})
    with measure_time("enumerate"):
        pass
    assert profiler.get_performance_stats()["enumerate"]["count"] == 1
