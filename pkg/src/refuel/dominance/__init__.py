"""Dominance rules, banned intervals, cut grids and the potential-schedule validator."""

from refuel.dominance.intervals import banned_set, cut_grid
from refuel.dominance.rules import RelationTable, classify_pair, linear_form, outranks
from refuel.dominance.validator import is_potential, pair_violation

__all__ = [
    "RelationTable",
    "banned_set",
    "classify_pair",
    "cut_grid",
    "is_potential",
    "linear_form",
    "outranks",
    "pair_violation",
]
