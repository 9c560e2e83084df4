"""Solver result models."""

from dataclasses import dataclass
from fractions import Fraction

from refuel.models.instance import NumericMode, Number


@dataclass
class SolveReport:
    """Result of one solve call.

    payoff is the maximized Σ w_j / C_j, the negation of the minimized
    Σ -w_j / C_j. leaves counts complete potential schedules enumerated
    by the recursive solver; other algorithms leave it at 0.
    """

    algo: str
    mode: NumericMode
    payoff: Number
    order: list[int]
    leaves: int = 0
    branches: int = 0
    nodes: int = 0
    elapsed: float = 0.0

    @property
    def elapsed_ms(self) -> float:
        return self.elapsed * 1000.0

    def to_dict(self) -> dict:
        """Serializable view; exact payoffs also appear as 'num/den'."""
        data = {
            "algo": self.algo,
            "mode": self.mode.value,
            "payoff": float(self.payoff),
            "order": list(self.order),
            "leaves": self.leaves,
            "branches": self.branches,
            "nodes": self.nodes,
            "elapsed_ms": self.elapsed_ms,
        }
        if isinstance(self.payoff, Fraction):
            data["payoff_exact"] = f"{self.payoff.numerator}/{self.payoff.denominator}"
        return data
