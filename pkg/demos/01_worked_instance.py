"""Walk through a four-interval instance: raw bounds, tightening, greedy, check."""

import numpy as np

from localheat import evaluate_schedule, prefix_bounds, raw_bounds, solve, validate_instance
from localheat.greedy import solve_greedy

inst = validate_instance({
    "horizon": 4,
    "heat_per_run": 2,
    "demand": [1, 1, 1, 1],
    "price": [3, 1, 4, 2],
    "lower": [0, 0, 0, 0, 0],
    "upper": [0, 3, 3, 3, 3],
})
print("demand ", inst.demand.tolist())
print("price  ", inst.price.tolist())

# how many runs are needed (at least) and allowed (at most) by the end of each interval
raw = raw_bounds(inst)
print("\nraw lower", raw.lower_raw.tolist())
print("raw upper", raw.upper_raw.tolist())

pb = prefix_bounds(inst)
print("\ntightened lower", pb.lower.tolist())
print("tightened upper", pb.upper.tolist())

# visit intervals cheapest first and watch each decision
trace = []
rep = solve_greedy(pb, inst.price, "dsu", trace=trace)
print("\n t  price  gap  lower-slack  take")
for t, gap, low, take in trace:
    print(f"{t:2d}  {inst.price[t - 1]:5.0f}  {gap!s:5}  {low!s:11}  {take}")

print("\nschedule", rep.schedule.decisions.tolist(), "cost", rep.schedule.cost)
ev = evaluate_schedule(inst, rep.schedule)
print("buffer trajectory", ev.trajectory.tolist(), "feasible:", ev.feasible)

for algorithm in ("naive", "tree", "dsu", "dp", "brute"):
    print(f"{algorithm:6s} cost {solve(inst, algorithm).schedule.cost:g}")

# run every interval instead: the buffer overflows
ev = evaluate_schedule(inst, np.ones(4, dtype=int))
print("\nalways on -> first violation at index", ev.first_violation)
