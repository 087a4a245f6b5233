"""Bound tracker built from three disjoint-set forests.

* ``a_runs`` partitions indices 0..T into maximal runs of equal lower
  value. The run holding ``t-1`` ends at ``t_A - 1``.
* ``b_runs`` does the same for the upper staircase. The run holding ``t``
  starts at ``t_B``.
* ``ba_sets`` partitions intervals 1..T into blocks that share both
  ``lower[t-1]`` and ``upper[t]``.

The slack of an interval is ``upper[t] - lower[t-1]`` and is constant on a
block. It is stored only on blocks S with

    lower(S-) < lower(S)  and  upper(S) < upper(S+)

(a missing neighbour satisfies its half). Any other block has a neighbour
whose slack is exactly one less, so its own slack is positive. Hence a gap
exists at t unless t's block stores a slack of 0.

A commit removes one step from each staircase, which merges at most one
pair of adjacent runs per staircase and at most two pairs of adjacent
blocks. Every stored value is kept at the block root.
"""

from __future__ import annotations

from array import array

from .bounds import PrefixBounds

NO_SLACK = -1


class DisjointSets:
    """Union by size with path compression over elements 0..n-1.

    Each root also records the smallest and largest element of its set.
    """

    def __init__(self, n: int):
        self.parent = array("i", range(n))
        self.size = array("i", [1]) * n
        self.lo = array("i", range(n))
        self.hi = array("i", range(n))
        self.finds = 0
        self.unions = 0

    @classmethod
    def from_blocks(cls, starts) -> "DisjointSets":
        """Consecutive blocks; ``starts[i]`` is true where a new block begins."""
        n = len(starts)
        ds = cls(n)
        parent, size, hi = ds.parent, ds.size, ds.hi
        root = 0
        for i in range(n):
            if starts[i] or i == 0:
                root = i
            else:
                parent[i] = root
                size[root] += 1
                hi[root] = i
        return ds

    def __len__(self):
        return len(self.parent)

    def find(self, x: int) -> int:
        self.finds += 1
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def link(self, rx: int, ry: int) -> int:
        """Unite two distinct roots and return the surviving root."""
        assert rx != ry
        self.unions += 1
        size = self.size
        if size[rx] < size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        size[rx] += size[ry]
        if self.lo[ry] < self.lo[rx]:
            self.lo[rx] = self.lo[ry]
        if self.hi[ry] > self.hi[rx]:
            self.hi[rx] = self.hi[ry]
        return rx

    def union(self, x: int, y: int) -> int:
        rx, ry = self.find(x), self.find(y)
        return rx if rx == ry else self.link(rx, ry)

    def same(self, x: int, y: int) -> bool:
        return self.find(x) == self.find(y)

    def _root(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            x = parent[x]
        return x

    def blocks(self, start: int = 0) -> list[tuple[int, int]]:
        """Sets as sorted (min, max) pairs; read-only, no compression, not counted."""
        seen = {}
        for i in range(start, len(self.parent)):
            r = self._root(i)
            seen[r] = (self.lo[r], self.hi[r])
        return sorted(seen.values())


class DsuTracker:
    name = "dsu"

    def __init__(self, pb: PrefixBounds):
        self._build(pb)

    def _build(self, pb: PrefixBounds):
        lower = [int(v) for v in pb.lower]
        upper = [int(v) for v in pb.upper]
        T = len(lower) - 1
        self.horizon = T
        self.a_runs = DisjointSets.from_blocks(
            [i == 0 or lower[i] != lower[i - 1] for i in range(T + 1)]
        )
        self.b_runs = DisjointSets.from_blocks(
            [i == 0 or upper[i] != upper[i - 1] for i in range(T + 1)]
        )
        # element 0 is a placeholder so interval t is element t
        self.ba_sets = DisjointSets.from_blocks(
            [
                t <= 1 or lower[t - 2] != lower[t - 1] or upper[t - 1] != upper[t]
                for t in range(T + 1)
            ]
        )
        slack = array("i", [NO_SLACK]) * (T + 1)
        ba = self.ba_sets
        for first in range(1, T + 1):
            if ba.parent[first] != first:
                continue
            last = ba.hi[first]
            below = first == 1 or lower[first - 2] < lower[first - 1]
            above = last == T or upper[last] < upper[last + 1]
            if below and above:
                slack[first] = upper[first] - lower[first - 1]
        self.slack = slack
        self._query = (None, None, None)

    # queries

    def gap(self, t):
        s = self.ba_sets.find(t)
        _, _, ra = self._query
        self._query = (t, s, ra if self._query[0] == t else None)
        return self.slack[s] != 0

    def lower_slack(self, t):
        ra = self.a_runs.find(t - 1)
        qt, s, _ = self._query
        self._query = (t, s if qt == t else None, ra)
        # the run of t-1 reaching T means lower[t-1] == lower[T]
        return self.a_runs.hi[ra] < self.horizon

    def t_points(self, t):
        a, b = self.a_runs, self.b_runs
        return a.hi[a.find(t - 1)] + 1, b.lo[b.find(t)]

    def stored_slack(self, t) -> int | None:
        v = self.slack[self.ba_sets.find(t)]
        return None if v == NO_SLACK else v

    # update

    def commit(self, t):
        T = self.horizon
        a, b, ba, slack = self.a_runs, self.b_runs, self.ba_sets, self.slack
        qt, s, ra = self._query
        if qt != t:
            s = ra = None
        self._query = (None, None, None)
        if s is None:
            s = ba.find(t)
        if ra is None:
            ra = a.find(t - 1)
        rb = b.find(t)
        t_a = a.hi[ra] + 1
        t_b = b.lo[rb]
        v_star = slack[s]
        assert v_star != 0, f"commit of interval {t} without a gap"

        starts_at_tb = ba.lo[s] == t_b
        ends_at_ta = ba.hi[s] == t_a
        left_in = right_in = False
        v_left = v_right = NO_SLACK

        # upper step at t_b goes away: intervals t_b-1 and t_b now share an upper value
        if t_b >= 2:
            s1 = ba.find(t_b - 1)
            v1 = slack[s1]
            r1 = ra if a.lo[ra] <= t_b - 1 else a.find(t_b - 1)
            if a.lo[r1] <= t_b - 2:
                s2 = s if starts_at_tb else ba.find(t_b)
                r = ba.link(s1, s2)
                if s2 == s:
                    s, left_in, v_left = r, True, v1
                else:
                    slack[r] = NO_SLACK
            else:
                slack[s1] = NO_SLACK

        # lower step at t_a goes away: intervals t_a and t_a+1 now share a lower value
        if t_a < T:
            s4 = ba.find(t_a + 1)
            v4 = slack[s4]
            r3 = rb if b.hi[rb] >= t_a else b.find(t_a)
            if b.hi[r3] > t_a:
                s3 = s if ends_at_ta else ba.find(t_a)
                r = ba.link(s3, s4)
                if s3 == s:
                    s, right_in, v_right = r, True, v4
                else:
                    slack[r] = NO_SLACK
            else:
                slack[s4] = NO_SLACK

        below = v_left != NO_SLACK if left_in else True
        above = v_right != NO_SLACK if right_in else True
        if below and above:
            if left_in:
                slack[s] = v_left
            elif right_in:
                slack[s] = v_right
            else:
                assert v_star != NO_SLACK
                slack[s] = v_star - 1
        else:
            slack[s] = NO_SLACK

        b.link(b.find(t_b - 1), rb)
        if t_a <= T:
            a.link(ra, a.find(t_a))

    # inspection

    def arrays(self) -> tuple[list[int], list[int]]:
        """Recover both staircases: the value at i is the number of earlier runs."""

        def values(ds):
            out = []
            for k, (lo, hi) in enumerate(ds.blocks()):
                out.extend([k] * (hi - lo + 1))
            return out

        return values(self.a_runs), values(self.b_runs)

    def snapshot(self) -> dict:
        """Partitions and stored slacks, for comparison against a fresh build."""
        ba = self.ba_sets
        blocks = ba.blocks(start=1)
        stored = {}
        for lo, hi in blocks:
            v = self.slack[ba._root(lo)]
            if v != NO_SLACK:
                stored[(lo, hi)] = v
        return {
            "a_runs": self.a_runs.blocks(),
            "b_runs": self.b_runs.blocks(),
            "ba_sets": blocks,
            "slack": stored,
        }

    def stats(self):
        parts = (self.a_runs, self.b_runs, self.ba_sets)
        return {
            "finds": sum(p.finds for p in parts),
            "unions": sum(p.unions for p in parts),
            "ba_unions": self.ba_sets.unions,
        }


def ba_build(pb: PrefixBounds) -> DsuTracker:
    return DsuTracker(pb)
