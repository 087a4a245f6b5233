"""Bound tracker backed by two sum trees over the step sequences.

Leaf ``t`` of a tree holds ``z[t] - z[t-1]`` (0 or 1, leaf 0 holds 0), so
the staircase value ``z[t]`` is the sum of leaves 0..t and removing one
step is clearing a single leaf. Both are O(log T).
"""

from __future__ import annotations

from array import array

from .bounds import PrefixBounds


class DiffTree:
    """Array-embedded complete binary tree of subtree sums.

    The leaf count is padded to a power of two; padding leaves hold 0.
    ``visits`` counts tree nodes touched, for checking the per-operation
    logarithmic bound.
    """

    def __init__(self, values):
        values = [int(v) for v in values]
        self.size = len(values) - 1  # T
        n = 1
        while n < len(values):
            n <<= 1
        self.leaves = n
        tree = array("i", [0]) * (2 * n)
        tree[n] = 0
        for t in range(1, len(values)):
            tree[n + t] = values[t] - values[t - 1]
        for i in range(n - 1, 0, -1):
            tree[i] = tree[2 * i] + tree[2 * i + 1]
        self.tree = tree
        self.visits = 0

    @property
    def total(self) -> int:
        return self.tree[1]

    def leaf(self, t: int) -> int:
        return self.tree[self.leaves + t]

    def prefix(self, t: int) -> int:
        """Sum of leaves 0..t, i.e. the staircase value at index t."""
        tree = self.tree
        i = t + self.leaves
        s = tree[i]
        steps = 1
        while i > 1:
            if i & 1:
                s += tree[i - 1]
            i >>= 1
            steps += 1
        self.visits += steps
        return s

    def find_kth(self, k: int) -> int:
        """Smallest index whose prefix sum reaches k (1 <= k <= total)."""
        tree = self.tree
        n = self.leaves
        i = 1
        steps = 1
        while i < n:
            i <<= 1
            if tree[i] < k:
                k -= tree[i]
                i += 1
            steps += 1
        self.visits += steps
        return i - n

    def next_one(self, t: int) -> int:
        """First 1-leaf at an index > t, or T+1 when the run of zeros reaches the end."""
        k = self.prefix(t) + 1
        if k > self.tree[1]:
            return self.size + 1
        return self.find_kth(k)

    def prev_one(self, t: int) -> int:
        """Last 1-leaf at an index <= t, or 0 when there is none."""
        k = self.prefix(t)
        if k == 0:
            return 0
        return self.find_kth(k)

    def clear(self, t: int) -> None:
        tree = self.tree
        i = t + self.leaves
        assert tree[i] == 1, f"leaf {t} holds no step"
        steps = 0
        while i:
            tree[i] -= 1
            i >>= 1
            steps += 1
        self.visits += steps

    def values(self) -> list[int]:
        out, s = [], 0
        for t in range(self.size + 1):
            s += self.tree[self.leaves + t]
            out.append(s)
        return out

    def audit(self) -> None:
        tree = self.tree
        for i in range(self.leaves - 1, 0, -1):
            assert tree[i] == tree[2 * i] + tree[2 * i + 1], f"node {i} sum is stale"
        for t in range(self.size + 1):
            assert tree[self.leaves + t] in (0, 1), f"leaf {t} is not a step"


def tree_build(pb: PrefixBounds) -> tuple[DiffTree, DiffTree]:
    return DiffTree(pb.lower), DiffTree(pb.upper)


class TreeTracker:
    name = "tree"

    def __init__(self, pb: PrefixBounds):
        self.horizon = pb.horizon
        self.lower_tree, self.upper_tree = tree_build(pb)
        # (t, lower[t-1], upper[t]) from the latest gap query; invalid after a commit
        self._query = (None, 0, 0)

    def _values(self, t):
        qt, a_prev, b_here = self._query
        if qt != t:
            a_prev = self.lower_tree.prefix(t - 1)
            b_here = self.upper_tree.prefix(t)
            self._query = (t, a_prev, b_here)
        return a_prev, b_here

    def t_points(self, t):
        return self.lower_tree.next_one(t - 1), self.upper_tree.prev_one(t)

    def lower_slack(self, t):
        return self._values(t)[0] < self.lower_tree.total

    def gap(self, t):
        a_prev, b_here = self._values(t)
        return a_prev < b_here

    def commit(self, t):
        lo, up = self.lower_tree, self.upper_tree
        a_prev, b_here = self._values(t)
        self._query = (None, 0, 0)
        assert a_prev < b_here, f"commit of interval {t} without a gap"
        if a_prev < lo.total:
            lo.clear(lo.find_kth(a_prev + 1))
        up.clear(up.find_kth(b_here))

    def arrays(self):
        return self.lower_tree.values(), self.upper_tree.values()

    def stats(self):
        return {"node_visits": self.lower_tree.visits + self.upper_tree.visits}
