"""Size guards shared by the exhaustive algorithms."""

from refuel.config import RefuelConfig
from refuel.exceptions import SizeGuardError

BRUTE_FORCE_LIMIT = 10
ASTAR_LIMIT = 30


def check_size(algo: str, n: int, limit: int, override: bool = False) -> None:
    """Raise SizeGuardError when n exceeds limit and no override is active."""
    if n > limit and not (override or RefuelConfig.size_guard_overridden()):
        raise SizeGuardError(algo, n, limit)
