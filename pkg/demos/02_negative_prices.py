"""Negative prices pay the heater to run, so the greedy takes them even when not needed."""

from localheat import GeneratorParams, generate_instance, prefix_bounds, solve

inst = generate_instance(12, GeneratorParams(horizon=24, heat_range=(2, 2), capacity=6, demand_scale=0.4,
                                             negative_fraction=0.25))
pb = prefix_bounds(inst)
need = int(pb.lower[-1])
rep = solve(inst, "dsu")
x = rep.schedule.decisions

print("price   ", " ".join(f"{p:3.0f}" for p in inst.price))
print("schedule", " ".join(f"{v:3d}" for v in x))
print(f"\nruns needed at the end: {need}, runs made: {x.sum()}")
neg_on = int(((inst.price < 0) & (x == 1)).sum())
print(f"negative-price intervals switched on: {neg_on} of {(inst.price < 0).sum()}"
      " (the rest would overflow the buffer)")

# strip the negative prices and only the forced runs remain
flat = inst.replace(price=abs(inst.price))
rep0 = solve(flat, "dsu")
print(f"with |price|: runs made {rep0.schedule.runs}, which equals the forced count {need}")
