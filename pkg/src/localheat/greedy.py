"""Price-ordered greedy solver over a pluggable bound tracker.

Intervals are visited once, cheapest first. Interval t is switched on when

    lower[t-1] < upper[t]  and  (lower[t-1] < lower[T]  or  price[t] < 0)

after which the bounds are updated by removing one step from each
staircase: ``lower[s] -= 1`` for ``s >= t_A`` and ``upper[s] -= 1`` for
``s >= t_B``, where ``t_A - 1`` is the last index holding the value
``lower[t-1]`` and ``t_B`` is the first index holding ``upper[t]``.

A tracker answers those three questions and performs the update. Three
implementations exist: :class:`NaiveTracker` here (linear-time update),
:class:`localheat.tree_tracker.TreeTracker` and
:class:`localheat.dsu_tracker.DsuTracker`.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Protocol

import numpy as np

from .bounds import Infeasible, PrefixBounds, first_violation
from .model import Schedule


class BadPermutation(ValueError):
    pass


class BoundTracker(Protocol):
    """Mutable view of the current lower/upper staircases.

    Interval indices ``t`` run over 1..T.
    """

    horizon: int

    def t_points(self, t: int) -> tuple[int, int]: ...

    def lower_slack(self, t: int) -> bool: ...

    def gap(self, t: int) -> bool: ...

    def commit(self, t: int) -> None: ...

    def stats(self) -> dict: ...


class NaiveTracker:
    """Explicit lists updated in place; O(T) per query for t_A/t_B and per commit."""

    name = "naive"

    def __init__(self, pb: PrefixBounds):
        self.horizon = pb.horizon
        self.lower = [int(v) for v in pb.lower]
        self.upper = [int(v) for v in pb.upper]

    @property
    def total_lower(self) -> int:
        return self.lower[-1]

    def t_points(self, t):
        lo, up = self.lower, self.upper
        t_a = t
        value = lo[t - 1]
        while t_a <= self.horizon and lo[t_a] == value:
            t_a += 1
        t_b = t
        value = up[t]
        while t_b > 0 and up[t_b - 1] == value:
            t_b -= 1
        return t_a, t_b

    def lower_slack(self, t):
        return self.lower[t - 1] < self.lower[-1]

    def gap(self, t):
        return self.lower[t - 1] < self.upper[t]

    def commit(self, t):
        assert self.gap(t), f"commit of interval {t} without a gap"
        t_a, t_b = self.t_points(t)
        lo, up = self.lower, self.upper
        lo[t_a:] = [v - 1 for v in lo[t_a:]]
        up[t_b:] = [v - 1 for v in up[t_b:]]

    def arrays(self) -> tuple[list[int], list[int]]:
        return list(self.lower), list(self.upper)

    def stats(self):
        return {}


def make_tracker(kind: str, pb: PrefixBounds):
    from .dsu_tracker import DsuTracker
    from .tree_tracker import TreeTracker

    trackers = {"naive": NaiveTracker, "tree": TreeTracker, "dsu": DsuTracker}
    try:
        cls = trackers[kind]
    except KeyError:
        raise ValueError(
            f"unknown tracker {kind!r}; choose from {', '.join(trackers)}"
        ) from None
    return cls(pb)


TRACKERS = ("naive", "tree", "dsu")


@dataclass
class SolveReport:
    schedule: Schedule
    engine: str
    stats: dict = field(default_factory=dict)
    elapsed: float = 0.0


def price_order(price) -> np.ndarray:
    """1-based interval order by nondecreasing price, ties by ascending index."""
    return np.argsort(np.asarray(price, dtype=float), kind="stable") + 1


def _check_order(order, T) -> list[int]:
    order = [int(t) for t in order]
    seen = bytearray(T + 1)
    for t in order:
        if not 1 <= t <= T or seen[t]:
            break
        seen[t] = 1
    else:
        if len(order) == T:
            return order
    raise BadPermutation(f"order is not a permutation of 1..{T}")


def solve_greedy(
    pb: PrefixBounds,
    price,
    tracker_kind: str = "dsu",
    order=None,
    trace: list | None = None,
) -> SolveReport:
    """Optimal schedule for prefix-sum bounds ``pb`` and the given prices.

    ``order`` is an optional 1-based visiting order; when given it is used
    as-is and need not be sorted by price. ``trace``, if a list, receives
    one ``(t, gap, lower_slack, committed)`` tuple per visited interval.
    Only the loop over ``order`` is timed.
    """
    T = pb.horizon
    price = np.asarray(price, dtype=float)
    if price.shape != (T,):
        raise ValueError(f"expected {T} prices, got {price.size}")
    bad = first_violation(pb)
    if bad is not None:
        raise Infeasible(f"no feasible schedule: lower[{bad}] > upper[{bad}]")
    order = price_order(price).tolist() if order is None else _check_order(order, T)

    tracker = make_tracker(tracker_kind, pb) if isinstance(tracker_kind, str) else tracker_kind
    x = [0] * T
    negative = (price < 0).tolist()
    gap, lower_slack, commit = tracker.gap, tracker.lower_slack, tracker.commit
    commits = 0

    start = time.perf_counter()
    if trace is None:
        for t in order:
            if gap(t) and (negative[t - 1] or lower_slack(t)):
                commit(t)
                x[t - 1] = 1
                commits += 1
    else:
        for t in order:
            g = gap(t)
            low = lower_slack(t) if g else None
            take = g and (low or negative[t - 1])
            if take:
                commit(t)
                x[t - 1] = 1
                commits += 1
            trace.append((t, g, low, take))
    elapsed = time.perf_counter() - start

    stats = {"commits": commits, "skips": T - commits, "finds": 0, "unions": 0}
    stats.update(tracker.stats())
    engine = getattr(tracker, "name", type(tracker).__name__)
    return SolveReport(Schedule.from_decisions(x, price), engine, stats, elapsed)
