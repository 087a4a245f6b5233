"""Reduction of a heating instance to bounds on the prefix sums of x.

The buffer constraints are equivalent to

    A'_t <= x_1 + ... + x_t <= B'_t        (t = 1..T)

and :func:`tighten` turns those raw bounds into staircase sequences
``lower``/``upper`` (index 0..T, value 0 at index 0, steps of 0 or 1)
admitting exactly the same 0/1 vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import EPS, HeatingInstance


class Infeasible(ValueError):
    """Raised when a solver is handed bounds with lower[t] > upper[t]."""


@dataclass(frozen=True, eq=False)
class RawBounds:
    lower_raw: np.ndarray
    upper_raw: np.ndarray

    @property
    def horizon(self) -> int:
        return self.lower_raw.size


@dataclass(frozen=True, eq=False)
class PrefixBounds:
    """Staircase bounds; ``lower[t]`` and ``upper[t]`` for t = 0..T."""

    lower: np.ndarray
    upper: np.ndarray

    @property
    def horizon(self) -> int:
        return self.lower.size - 1

    @classmethod
    def from_sequences(cls, lower, upper) -> "PrefixBounds":
        lo = np.array(lower, dtype=np.int64)
        up = np.array(upper, dtype=np.int64)
        if lo.shape != up.shape or lo.ndim != 1 or lo.size < 2:
            raise ValueError("lower and upper must be equal-length sequences over 0..T")
        lo.setflags(write=False)
        up.setflags(write=False)
        return cls(lo, up)

    def is_staircase(self) -> bool:
        return is_staircase(self.lower) and is_staircase(self.upper)


def is_staircase(z) -> bool:
    z = np.asarray(z)
    if z.size == 0 or z[0] != 0:
        return False
    d = np.diff(z)
    return bool(np.all((d == 0) | (d == 1)))


def _ceil(q: float) -> int:
    return math.ceil(q - EPS * max(1.0, abs(q)))


def _floor(q: float) -> int:
    return math.floor(q + EPS * max(1.0, abs(q)))


def raw_bounds(inst: HeatingInstance) -> RawBounds:
    T = inst.horizon
    H = inst.heat_per_run
    s1 = inst.lower[0]
    served = np.cumsum(inst.demand)
    q_lo = ((inst.lower[1:] - s1 + served) / H).tolist()
    q_up = ((inst.upper[1:] - s1 + served) / H).tolist()
    lo = np.fromiter((max(0, _ceil(q)) for q in q_lo), dtype=np.int64, count=T)
    up = np.fromiter(
        (min(t, _floor(q)) for t, q in enumerate(q_up, start=1)), dtype=np.int64, count=T
    )
    lo.setflags(write=False)
    up.setflags(write=False)
    return RawBounds(lo, up)


def tighten(raw: RawBounds) -> PrefixBounds:
    """Pointwise-tightest staircase bounds with the same 0/1 feasible set.

    Lower side: a backward pass ``lower[t] = max(lower[t], lower[t+1] - 1)``
    followed by a forward running maximum. Upper side: a backward running
    minimum followed by ``upper[t] = min(upper[t], upper[t-1] + 1)``. The
    slope-limited passes become running extrema of ``z[t] - t``.

    On infeasible input index 0 may pick up a nonzero value; that is always
    accompanied by ``lower[t] > upper[t]`` at some t >= 1.
    """
    T = raw.horizon
    idx = np.arange(T + 1, dtype=np.int64)

    lo = np.concatenate(([0], raw.lower_raw)).astype(np.int64)
    shifted = lo - idx
    shifted = np.maximum.accumulate(shifted[::-1])[::-1]
    lo = np.maximum.accumulate(shifted + idx)

    up = np.concatenate(([0], raw.upper_raw)).astype(np.int64)
    up = np.minimum.accumulate(up[::-1])[::-1]
    shifted = np.minimum.accumulate(up - idx)
    up = shifted + idx

    lo.setflags(write=False)
    up.setflags(write=False)
    return PrefixBounds(lo, up)


def prefix_bounds(inst: HeatingInstance) -> PrefixBounds:
    return tighten(raw_bounds(inst))


def first_violation(pb: PrefixBounds) -> int | None:
    """Smallest t in 1..T with lower[t] > upper[t], or None."""
    bad = pb.lower[1:] > pb.upper[1:]
    if not bad.any():
        return None
    return int(np.argmax(bad)) + 1


def check_feasible(pb: PrefixBounds) -> bool:
    return first_violation(pb) is None


def canonical_feasible_schedule(pb: PrefixBounds) -> np.ndarray:
    """x_t = lower[t] - lower[t-1]: feasible whenever the bounds are, but not optimal."""
    if not check_feasible(pb):
        raise Infeasible(f"lower[t] > upper[t] at t={first_violation(pb)}")
    return np.diff(pb.lower).astype(np.int8)
