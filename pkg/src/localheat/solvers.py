"""One entry point for every engine, with the result re-checked by simulation."""

from __future__ import annotations

import time

from .bounds import Infeasible, first_violation, prefix_bounds
from .greedy import TRACKERS, SolveReport, solve_greedy
from .model import HeatingInstance, evaluate_schedule
from .oracle import solve_bruteforce, solve_dp

ALGORITHMS = TRACKERS + ("dp", "brute")


class VerificationError(RuntimeError):
    """A solver returned a schedule that fails the buffer simulation."""


def solve(inst: HeatingInstance, algorithm: str = "dsu", order=None) -> SolveReport:
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}; choose from {', '.join(ALGORITHMS)}")
    pb = prefix_bounds(inst)
    bad = first_violation(pb)
    if algorithm in TRACKERS:
        if bad is not None:
            raise Infeasible(f"no feasible schedule: lower[{bad}] > upper[{bad}]")
        report = solve_greedy(pb, inst.price, algorithm, order=order)
    else:
        start = time.perf_counter()
        sched = solve_dp(pb, inst.price) if algorithm == "dp" else solve_bruteforce(inst)
        elapsed = time.perf_counter() - start
        if sched is None:
            where = f"lower[{bad}] > upper[{bad}]" if bad is not None else "enumeration found none"
            raise Infeasible(f"no feasible schedule: {where}")
        report = SolveReport(sched, algorithm, {"commits": sched.runs}, elapsed)

    ev = evaluate_schedule(inst, report.schedule)
    if not ev.feasible:
        raise VerificationError(
            f"{algorithm} schedule violates the buffer bounds at index {ev.first_violation}"
        )
    if ev.cost != report.schedule.cost:
        raise VerificationError(f"{algorithm} cost {report.schedule.cost} != simulated {ev.cost}")
    return report
