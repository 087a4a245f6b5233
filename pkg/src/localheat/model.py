"""Problem definition for the offline local-heating planning problem.

A two-state converter produces ``heat_per_run`` units of heat in every
interval it is switched on. The heat goes into a buffer whose state of
charge evolves as

    s[t+1] = s[t] + H * x[t] - D[t]

and must stay within ``lower[t] <= s[t] <= upper[t]`` for t = 1..T+1.
Running in interval t costs ``price[t]``.

Documentation uses 1-based interval indices. Storage is 0-based:
``demand[0]`` is the demand of interval 1 and ``lower[0]`` is L_1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# relative tolerance for comparisons of real-valued heat quantities
EPS = 1e-9


class InstanceError(ValueError):
    """Base class for invalid instance data."""


class LengthMismatch(InstanceError):
    pass


class InitialStateUnpinned(InstanceError):
    pass


class NonPositiveHeat(InstanceError):
    pass


class NegativeDemand(InstanceError):
    pass


class BoundOrder(InstanceError):
    pass


def _frozen(values, dtype=float) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class HeatingInstance:
    """A validated problem instance. Use :func:`validate_instance` to build one."""

    horizon: int
    heat_per_run: float
    demand: np.ndarray
    price: np.ndarray
    lower: np.ndarray
    upper: np.ndarray

    def __eq__(self, other):
        if not isinstance(other, HeatingInstance):
            return NotImplemented
        return (
            self.horizon == other.horizon
            and self.heat_per_run == other.heat_per_run
            and np.array_equal(self.demand, other.demand)
            and np.array_equal(self.price, other.price)
            and np.array_equal(self.lower, other.lower)
            and np.array_equal(self.upper, other.upper)
        )

    __hash__ = None

    @property
    def initial_state(self) -> float:
        return float(self.lower[0])

    def replace(self, **changes) -> "HeatingInstance":
        data = {
            "horizon": self.horizon,
            "heat_per_run": self.heat_per_run,
            "demand": self.demand,
            "price": self.price,
            "lower": self.lower,
            "upper": self.upper,
        }
        data.update(changes)
        return validate_instance(data)

    def to_dict(self) -> dict:
        return {
            "horizon": self.horizon,
            "heat_per_run": self.heat_per_run,
            "demand": self.demand.tolist(),
            "price": self.price.tolist(),
            "lower": self.lower.tolist(),
            "upper": self.upper.tolist(),
        }


@dataclass(frozen=True, eq=False)
class Schedule:
    """On/off decisions ``decisions[t-1] = x_t`` together with their cost."""

    decisions: np.ndarray
    cost: float

    @classmethod
    def from_decisions(cls, decisions, price) -> "Schedule":
        x = _frozen(decisions, dtype=np.int8)
        price = np.asarray(price, dtype=float)
        if x.shape != price.shape:
            raise LengthMismatch(
                f"schedule has {x.size} decisions, prices cover {price.size} intervals"
            )
        if x.size and (x.min() < 0 or x.max() > 1):
            raise ValueError("decisions must be 0 or 1")
        return cls(x, schedule_cost(price, x))

    @property
    def runs(self) -> int:
        return int(self.decisions.sum())

    def __eq__(self, other):
        if not isinstance(other, Schedule):
            return NotImplemented
        return self.cost == other.cost and np.array_equal(self.decisions, other.decisions)

    __hash__ = None


@dataclass(frozen=True)
class EvaluationReport:
    trajectory: np.ndarray = field(repr=False)
    feasible: bool
    first_violation: int | None
    cost: float


def schedule_cost(price, decisions) -> float:
    # left-to-right sum over the selected prices only
    price = np.asarray(price, dtype=float)
    mask = np.asarray(decisions) != 0
    return float(sum(price[mask].tolist()))


def validate_instance(raw) -> HeatingInstance:
    """Check raw instance data and return an immutable :class:`HeatingInstance`.

    ``raw`` is a mapping with the keys ``horizon``, ``heat_per_run``,
    ``demand``, ``price``, ``lower`` and ``upper``.
    """
    missing = [
        k for k in ("horizon", "heat_per_run", "demand", "price", "lower", "upper")
        if k not in raw
    ]
    if missing:
        raise InstanceError(f"missing fields: {', '.join(missing)}")

    horizon = raw["horizon"]
    if isinstance(horizon, float) and horizon.is_integer():
        horizon = int(horizon)
    if not isinstance(horizon, (int, np.integer)) or isinstance(horizon, bool) or horizon < 1:
        raise InstanceError(f"horizon must be a positive integer, got {horizon!r}")
    horizon = int(horizon)

    demand = np.asarray(raw["demand"], dtype=float).ravel()
    price = np.asarray(raw["price"], dtype=float).ravel()
    lower = np.asarray(raw["lower"], dtype=float).ravel()
    upper = np.asarray(raw["upper"], dtype=float).ravel()
    for name, arr, n in (
        ("demand", demand, horizon),
        ("price", price, horizon),
        ("lower", lower, horizon + 1),
        ("upper", upper, horizon + 1),
    ):
        if arr.size != n:
            raise LengthMismatch(f"{name} has length {arr.size}, expected {n}")
        if not np.all(np.isfinite(arr)):
            raise InstanceError(f"{name} contains non-finite values")

    heat = float(raw["heat_per_run"])
    if not heat > 0 or not np.isfinite(heat):
        raise NonPositiveHeat(f"heat_per_run must be positive, got {heat}")
    if np.any(demand < 0):
        t = int(np.argmax(demand < 0)) + 1
        raise NegativeDemand(f"demand of interval {t} is negative")
    if lower[0] != upper[0]:
        raise InitialStateUnpinned(
            f"initial state must be fixed: lower[1]={lower[0]} != upper[1]={upper[0]}"
        )
    if np.any(lower > upper):
        t = int(np.argmax(lower > upper)) + 1
        raise BoundOrder(f"lower[{t}] > upper[{t}]")

    return HeatingInstance(
        horizon, heat, _frozen(demand), _frozen(price), _frozen(lower), _frozen(upper)
    )


def evaluate_schedule(inst: HeatingInstance, sched) -> EvaluationReport:
    """Simulate the buffer for a schedule and check every state-of-charge bound.

    ``sched`` may be a :class:`Schedule` or a plain 0/1 sequence.
    """
    x = sched.decisions if isinstance(sched, Schedule) else np.asarray(sched)
    if x.shape != (inst.horizon,):
        raise LengthMismatch(f"schedule has {x.size} decisions, expected {inst.horizon}")

    traj = np.empty(inst.horizon + 1)
    s = traj[0] = inst.lower[0]
    H = inst.heat_per_run
    for t in range(inst.horizon):
        s = s + H * x[t] - inst.demand[t]
        traj[t + 1] = s

    tol = EPS * np.maximum(1.0, np.abs(traj))
    bad = (traj < inst.lower - tol) | (traj > inst.upper + tol)
    first = int(np.argmax(bad)) + 1 if bad.any() else None
    traj.setflags(write=False)
    return EvaluationReport(traj, first is None, first, schedule_cost(inst.price, x))


@dataclass(frozen=True)
class GeneratorParams:
    """Settings for :func:`generate_instance`.

    Demand per interval is drawn uniformly from ``[0, demand_scale * H]``;
    ``demand_scale <= 1`` together with ``capacity >= H`` keeps the instance
    feasible. Prices are integers of magnitude at most ``price_max``, each
    negated with probability ``negative_fraction``.
    """

    horizon: int = 24
    heat_range: tuple[float, float] = (1, 4)
    demand_scale: float = 1.0
    price_max: float = 10
    negative_fraction: float = 0.0
    capacity: float | None = None
    base_level: float = 0.0
    initial_fill: float = 0.0
    integral: bool = True


def generate_instance(seed: int, params: GeneratorParams = GeneratorParams()) -> HeatingInstance:
    rng = np.random.default_rng(seed)
    T = params.horizon
    lo, hi = params.heat_range
    if params.integral:
        heat = float(rng.integers(int(lo), int(hi) + 1))
        demand = rng.integers(0, int(np.floor(params.demand_scale * heat)) + 1, size=T)
        price = rng.integers(0, int(params.price_max) + 1, size=T)
    else:
        heat = float(rng.uniform(lo, hi))
        demand = rng.uniform(0, params.demand_scale * heat, size=T)
        price = rng.uniform(0, params.price_max, size=T)
    flip = rng.random(T) < params.negative_fraction
    price = np.where(flip, -price, price)

    capacity = 2 * heat if params.capacity is None else params.capacity
    if params.integral:
        capacity = float(np.floor(capacity))
    base = params.base_level
    lower = np.full(T + 1, base, dtype=float)
    upper = np.full(T + 1, base + capacity, dtype=float)
    start = base + min(params.initial_fill, capacity)
    lower[0] = upper[0] = start
    return validate_instance(
        {
            "horizon": T,
            "heat_per_run": heat,
            "demand": demand.astype(float),
            "price": price.astype(float),
            "lower": lower,
            "upper": upper,
        }
    )
