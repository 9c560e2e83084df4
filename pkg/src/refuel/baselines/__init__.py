"""Reference algorithms used as oracles and benchmark baselines."""

from refuel.baselines._guards import ASTAR_LIMIT, BRUTE_FORCE_LIMIT, check_size
from refuel.baselines.astar import AStarState, astar, remaining_bound
from refuel.baselines.brute_force import brute_force, count_potential_brute
from refuel.baselines.greedy import greedy_potential, greedy_report

__all__ = [
    "ASTAR_LIMIT",
    "BRUTE_FORCE_LIMIT",
    "AStarState",
    "astar",
    "brute_force",
    "check_size",
    "count_potential_brute",
    "greedy_potential",
    "greedy_report",
    "remaining_bound",
]
