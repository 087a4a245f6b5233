import itertools

import numpy as np
import pytest

from localheat import evaluate_schedule, solve_bruteforce, solve_dp
from localheat.bounds import prefix_bounds
from localheat.harness import fuzz_instance
from localheat.model import Schedule
from localheat.oracle import MAX_BRUTE_HORIZON, HorizonTooLarge, all_decisions, feasible_mask


def test_all_decisions_lexicographic():
    X = all_decisions(3)
    assert X.shape == (8, 3)
    assert [tuple(r) for r in X] == list(itertools.product([0, 1], repeat=3))


def test_feasible_mask_matches_evaluate(w1):
    X = all_decisions(w1.horizon)
    mask = feasible_mask(w1, X)
    for row, ok in zip(X, mask):
        assert evaluate_schedule(w1, Schedule.from_decisions(row, w1.price)).feasible == ok


def test_brute_w1(w1):
    best = solve_bruteforce(w1)
    assert best.decisions.tolist() == [1, 1, 0, 0] and best.cost == 4


def test_brute_w2(w2):
    assert solve_bruteforce(w2).cost == -5


def test_brute_infeasible(short_of_heat):
    assert solve_bruteforce(short_of_heat) is None
    assert solve_dp(prefix_bounds(short_of_heat), short_of_heat.price) is None


def test_brute_horizon_cap():
    inst = fuzz_instance(0, MAX_BRUTE_HORIZON + 1, MAX_BRUTE_HORIZON + 1)
    with pytest.raises(HorizonTooLarge):
        solve_bruteforce(inst)


def test_dp_w1(w1, w1_bounds):
    assert solve_dp(w1_bounds, w1.price).cost == 4


@pytest.mark.parametrize("seed", range(150))
def test_dp_matches_brute(seed):
    inst = fuzz_instance(seed, 1, 12, ["mixed", "positive", "negative"][seed % 3])
    brute = solve_bruteforce(inst)
    dp = solve_dp(prefix_bounds(inst), inst.price)
    assert (brute is None) == (dp is None)
    if dp is not None:
        assert dp.cost == brute.cost
        assert evaluate_schedule(inst, dp).feasible


def test_dp_on_real_valued_instance():
    from localheat import GeneratorParams, generate_instance

    inst = generate_instance(4, GeneratorParams(horizon=10, integral=False, negative_fraction=0.3))
    brute = solve_bruteforce(inst)
    dp = solve_dp(prefix_bounds(inst), inst.price)
    assert (brute is None) == (dp is None)
    if dp is not None:
        assert np.isclose(dp.cost, brute.cost)
