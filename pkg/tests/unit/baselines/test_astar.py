"""Tests for A* over job subsets."""

from fractions import Fraction
from itertools import permutations

import pytest

from refuel.baselines import AStarState, astar, brute_force, remaining_bound
from refuel.core import schedule_payoff
from refuel.exceptions import SizeGuardError, SolveTimeoutError
from refuel.models.instance import NumericMode

EXACT = NumericMode.EXACT


class TestAStar:
    def test_crossing_pair(self, crossing_pair):
        report = astar(crossing_pair)
        assert report.algo == "astar"
        assert report.payoff == pytest.approx(20.727272727272727, rel=1e-12)
        assert report.order == [0, 1]

    def test_exact_mode(self, crossing_pair):
        assert astar(crossing_pair, EXACT).payoff == Fraction(228, 11)

    @pytest.mark.parametrize("seed", range(8))
    def test_matches_brute_force(self, make_instance, seed):
        instance = make_instance(2 + seed % 6, 0.1 + 0.1 * seed, seed=seed)
        report = astar(instance, EXACT)
        assert report.payoff == brute_force(instance, EXACT).payoff
        assert schedule_payoff(instance, report.order, mode=EXACT) == report.payoff

    @pytest.mark.parametrize("seed", range(5))
    def test_prune_keeps_payoff(self, make_instance, seed):
        instance = make_instance(10, 0.5, seed=seed)
        plain = astar(instance, EXACT)
        pruned = astar(instance, EXACT, prune=True)
        assert pruned.payoff == plain.payoff

    def test_size_guard(self, make_instance):
        with pytest.raises(SizeGuardError):
            astar(make_instance(31, 0.5))

    def test_timeout(self, make_instance, mocker):
        mocker.patch("refuel.baselines.astar.Deadline.tick", return_value=True)
        with pytest.raises(SolveTimeoutError) as exc_info:
            astar(make_instance(8, 0.5), timeout_s=1.0)
        assert exc_info.value.algo == "astar"


class TestHeuristic:
    @pytest.mark.parametrize("mask", [0b0, 0b1, 0b101, 0b10010, 0b111110])
    def test_bound_covers_every_completion(self, make_instance, mask):
        instance = make_instance(6, 0.8, seed=3)
        scheduled = [j for j in range(6) if mask >> j & 1]
        rest = [j for j in range(6) if not mask >> j & 1]
        t = sum(instance.job(j).p for j in scheduled)
        state = AStarState(mask, Fraction(0), t)
        bound = remaining_bound(instance, state, EXACT)
        for tail in permutations(rest):
            completion = Fraction(0)
            now = t
            for j in tail:
                now += instance.job(j).p
                completion += Fraction(instance.job(j).w) / now
            assert completion <= bound

    def test_state_membership(self):
        state = AStarState(0b101, 0.0, 0)
        assert state.contains(0)
        assert not state.contains(1)
        assert state.contains(2)
