"""Problem core: φ, schedule evaluation and the drop-out view."""

from refuel.core.schedule import (
    build_schedule,
    check_permutation,
    phi,
    schedule_payoff,
    start_times,
    swap_delta,
    to_dropout_order,
)

__all__ = [
    "build_schedule",
    "check_permutation",
    "phi",
    "schedule_payoff",
    "start_times",
    "swap_delta",
    "to_dropout_order",
]
