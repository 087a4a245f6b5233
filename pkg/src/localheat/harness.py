"""Differential fuzzing of the engines and wall-clock scaling benchmarks."""

from __future__ import annotations

import gc
import statistics
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .bounds import PrefixBounds, check_feasible, prefix_bounds
from .dsu_tracker import DsuTracker
from .greedy import TRACKERS, NaiveTracker, price_order, solve_greedy
from .model import GeneratorParams, HeatingInstance, Schedule, evaluate_schedule, generate_instance
from .oracle import solve_bruteforce, solve_dp
from .tree_tracker import TreeTracker

PRICE_MODES = {"mixed": 0.5, "positive": 0.0, "negative": 1.0}

Engine = Callable[[PrefixBounds, np.ndarray], Schedule]


def greedy_engine(kind: str) -> Engine:
    def run(pb, price):
        return solve_greedy(pb, price, kind).schedule

    run.__name__ = kind
    return run


def default_engines() -> dict[str, Engine]:
    return {kind: greedy_engine(kind) for kind in TRACKERS}


def fuzz_instance(seed: int, t_min: int = 1, t_max: int = 12, price_mode: str = "mixed",
                  price_max: int = 10) -> HeatingInstance:
    """Random small instance with integer data; about one in eight is infeasible."""
    rng = np.random.default_rng([seed, 0x5EED])
    T = int(rng.integers(t_min, t_max + 1))
    H = int(rng.integers(1, 5))
    params = GeneratorParams(
        horizon=T,
        heat_range=(H, H),
        demand_scale=float(rng.choice([0.5, 1.0, 1.0, 1.5])),
        price_max=price_max,
        negative_fraction=PRICE_MODES[price_mode],
        capacity=int(rng.integers(0, 3 * H + 1)),
        initial_fill=int(rng.integers(0, 2 * H + 1)),
    )
    return generate_instance(int(rng.integers(2**31)), params)


@dataclass
class FuzzResult:
    checked: int = 0
    feasible: int = 0
    failure: str | None = None
    seed: int | None = None
    instance: HeatingInstance | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None


def check_instance(inst: HeatingInstance, engines: dict[str, Engine], brute_max: int = 14) -> str | None:
    """Compare every engine against the oracles; returns a message on disagreement."""
    pb = prefix_bounds(inst)
    feasible = check_feasible(pb)
    brute = solve_bruteforce(inst) if inst.horizon <= brute_max else None
    dp = solve_dp(pb, inst.price)
    if inst.horizon <= brute_max and (brute is not None) != feasible:
        return f"feasibility: bounds say {feasible}, enumeration says {brute is not None}"
    if (dp is not None) != feasible:
        return f"feasibility: bounds say {feasible}, dp says {dp is not None}"
    if not feasible:
        return None
    if brute is not None and brute.cost != dp.cost:
        return f"oracles disagree: brute {brute.cost} vs dp {dp.cost}"
    for name, engine in engines.items():
        sched = engine(pb, inst.price)
        ev = evaluate_schedule(inst, sched)
        if not ev.feasible:
            return f"{name}: schedule infeasible at index {ev.first_violation}"
        if ev.cost != dp.cost:
            return f"{name}: cost {ev.cost} but optimum is {dp.cost}"
    return None


def run_fuzz(count: int, t_min: int = 1, t_max: int = 12, seed: int = 0,
             price_mode: str = "mixed", engines: dict[str, Engine] | None = None,
             brute_max: int = 14) -> FuzzResult:
    """Check ``count`` instances with seeds ``seed, seed+1, ...``; stop at the first disagreement."""
    engines = default_engines() if engines is None else engines
    result = FuzzResult()
    for i in range(count):
        s = seed + i
        inst = fuzz_instance(s, t_min, t_max, price_mode)
        msg = check_instance(inst, engines, brute_max)
        result.checked += 1
        if msg is not None:
            result.failure, result.seed, result.instance = msg, s, inst
            return result
        result.feasible += check_feasible(prefix_bounds(inst))
    return result


def bench_instance(T: int, seed: int = 0) -> HeatingInstance:
    # demand <= H and capacity >= H keep every generated instance feasible
    params = GeneratorParams(horizon=T, heat_range=(4, 4), demand_scale=1.0,
                             price_max=10**6, capacity=8)
    return generate_instance(seed, params)


@dataclass
class BenchRow:
    engine: str
    size: int
    times: list[float]

    @property
    def median(self) -> float:
        return statistics.median(self.times)


def time_solve(pb: PrefixBounds, price, engine: str, presorted: bool = True,
               order=None) -> float:
    """Wall time of one greedy solve; the price sort is excluded when ``presorted``."""
    if presorted and order is None:
        order = price_order(price).tolist()
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        start = time.perf_counter()
        if not presorted:
            order = price_order(price).tolist()
        solve_greedy(pb, price, engine, order=order)
        return time.perf_counter() - start
    finally:
        if gc_was_enabled:
            gc.enable()


def run_bench(sizes, engines=("dsu",), repeats: int = 3, presorted: bool = True,
              seed: int = 0) -> list[BenchRow]:
    rows = []
    for T in sizes:
        inst = bench_instance(T, seed)
        pb = prefix_bounds(inst)
        order = price_order(inst.price).tolist()
        for engine in engines:
            times = [time_solve(pb, inst.price, engine, presorted, order if presorted else None)
                     for _ in range(repeats)]
            rows.append(BenchRow(engine, T, times))
    return rows


def growth_exponent(sizes, times) -> float:
    """Least-squares slope of log(time) against log(size)."""
    return float(np.polyfit(np.log(sizes), np.log(times), 1)[0])


def exponents(rows: list[BenchRow]) -> dict[str, float]:
    out = {}
    for engine in dict.fromkeys(r.engine for r in rows):
        mine = [r for r in rows if r.engine == engine]
        if len(mine) >= 2:
            out[engine] = growth_exponent([r.size for r in mine], [r.median for r in mine])
    return out


def format_bench(rows: list[BenchRow]) -> str:
    lines = ["engine\tsize\trepeats\tmedian_s\tmin_s\tmax_s"]
    for r in rows:
        lines.append(f"{r.engine}\t{r.size}\t{len(r.times)}\t{r.median:.6f}\t"
                     f"{min(r.times):.6f}\t{max(r.times):.6f}")
    for engine, k in exponents(rows).items():
        lines.append(f"# slope\t{engine}\t{k:.3f}")
    return "\n".join(lines)


class TrackerMismatch(AssertionError):
    pass


def lockstep(pb: PrefixBounds, commits, query_all: bool = True, rebuild_every: int = 1,
             rng: np.random.Generator | None = None, probes: int = 8) -> int:
    """Drive naive, tree and dsu trackers through the same commits and compare them.

    Before every commit all queries are compared, at every interval when
    ``query_all`` or at ``probes`` random intervals otherwise. After every
    ``rebuild_every``-th commit the dsu state must equal a fresh build from
    the naive arrays and the tree must reproduce those arrays. Intervals in
    ``commits`` without a gap are skipped. Returns the number of commits made.
    """
    T = pb.horizon
    naive, tree, dsu = NaiveTracker(pb), TreeTracker(pb), DsuTracker(pb)
    rng = np.random.default_rng(0) if rng is None else rng
    done = 0
    for t in commits:
        qs = range(1, T + 1) if query_all else [t, *rng.integers(1, T + 1, size=probes).tolist()]
        for q in qs:
            want = (naive.gap(q), naive.lower_slack(q), naive.t_points(q))
            for other in (tree, dsu):
                got = (other.gap(q), other.lower_slack(q), other.t_points(q))
                if got != want:
                    raise TrackerMismatch(
                        f"{other.name} answers {got} at t={q} after {done} commits, naive {want}")
        if not naive.gap(t):
            continue
        for tr in (naive, tree, dsu):
            tr.commit(t)
        done += 1
        if rebuild_every and done % rebuild_every == 0:
            lo, up = naive.arrays()
            if tree.arrays() != (lo, up):
                raise TrackerMismatch(f"tree arrays differ from naive after commit of {t}")
            fresh = DsuTracker(PrefixBounds.from_sequences(lo, up)).snapshot()
            if dsu.snapshot() != fresh:
                raise TrackerMismatch(f"dsu state differs from a rebuild after commit of {t}")
    return done
