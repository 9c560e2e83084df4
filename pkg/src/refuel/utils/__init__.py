"""Shared CLI and timing helpers."""

from refuel.utils.error_handler import handle_errors
from refuel.utils.output_formatter import OutputFormatter
from refuel.utils.profiler import Deadline, Stopwatch, get_performance_stats, measure_time

__all__ = ["Deadline", "OutputFormatter", "Stopwatch", "get_performance_stats", "handle_errors", "measure_time"]
