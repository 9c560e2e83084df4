"""Exact solver: pivot selection, branch enumeration and the recursive search."""

from refuel.solver.fast_schedule import (
    Branch,
    FastScheduler,
    enumerate_potential,
    fast_schedule,
    iter_potential,
    select_alpha,
    solve_instance,
)

__all__ = [
    "Branch",
    "FastScheduler",
    "enumerate_potential",
    "fast_schedule",
    "iter_potential",
    "select_alpha",
    "solve_instance",
]
