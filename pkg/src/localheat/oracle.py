"""Exact reference solvers, kept independent of the greedy code path."""

from __future__ import annotations

import numpy as np

from .bounds import PrefixBounds, check_feasible
from .model import EPS, HeatingInstance, Schedule

MAX_BRUTE_HORIZON = 20


class HorizonTooLarge(ValueError):
    pass


def all_decisions(T: int) -> np.ndarray:
    """Every 0/1 vector of length T, one per row, in lexicographic order."""
    codes = np.arange(1 << T, dtype=np.int64)
    shifts = np.arange(T - 1, -1, -1, dtype=np.int64)
    return ((codes[:, None] >> shifts) & 1).astype(np.int8)


def feasible_mask(inst: HeatingInstance, X: np.ndarray) -> np.ndarray:
    """Rows of X that keep the simulated buffer within its bounds."""
    H = inst.heat_per_run
    traj = inst.lower[0] + np.cumsum(H * X - inst.demand, axis=1)
    tol = EPS * np.maximum(1.0, np.abs(traj))
    return np.all((traj >= inst.lower[1:] - tol) & (traj <= inst.upper[1:] + tol), axis=1)


def solve_bruteforce(inst: HeatingInstance) -> Schedule | None:
    """Cheapest schedule by enumerating all 2**T candidates, or None if none is feasible.

    Ties go to the lexicographically smallest decision vector.
    """
    T = inst.horizon
    if T > MAX_BRUTE_HORIZON:
        raise HorizonTooLarge(f"brute force is capped at T={MAX_BRUTE_HORIZON}, got {T}")
    X = all_decisions(T)
    ok = feasible_mask(inst, X)
    if not ok.any():
        return None
    costs = X.astype(float) @ inst.price
    costs[~ok] = np.inf
    best = int(np.argmin(costs))
    return Schedule.from_decisions(X[best], inst.price)


def solve_dp(pb: PrefixBounds, price) -> Schedule | None:
    """Dynamic program over (interval, number of runs so far).

    value[t][k] is the cheapest way to have exactly k runs among intervals
    1..t while respecting every bound up to t.
    """
    if not check_feasible(pb):
        return None
    price = np.asarray(price, dtype=float)
    T = pb.horizon
    lower, upper = pb.lower, pb.upper
    ks = np.arange(T + 1)
    value = np.full(T + 1, np.inf)
    value[0] = 0.0
    took = np.zeros((T, T + 1), dtype=bool)
    for t in range(1, T + 1):
        run = np.full(T + 1, np.inf)
        run[1:] = value[:-1] + price[t - 1]
        took[t - 1] = run < value
        value = np.minimum(value, run)
        value[(ks < lower[t]) | (ks > upper[t])] = np.inf

    k = int(np.argmin(value))
    if not np.isfinite(value[k]):
        return None
    x = np.zeros(T, dtype=np.int8)
    for t in range(T, 0, -1):
        if took[t - 1, k]:
            x[t - 1] = 1
            k -= 1
    return Schedule.from_decisions(x, price)
