import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from localheat import PrefixBounds
from localheat.bounds import prefix_bounds
from localheat.dsu_tracker import DisjointSets, DsuTracker, ba_build
from localheat.greedy import price_order, solve_greedy
from localheat.harness import bench_instance, fuzz_instance, lockstep


def slack_table(tr):
    return tr.snapshot()["slack"]


@settings(max_examples=100, deadline=None)
@given(n=st.integers(1, 40), data=st.data())
def test_disjoint_sets_match_shadow_partition(n, data):
    ds = DisjointSets(n)
    label = list(range(n))
    pairs = data.draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=60))
    for x, y in pairs:
        ds.union(x, y)
        old, new = label[y], label[x]
        label = [new if v == old else v for v in label]
        for i in range(n):
            for j in range(n):
                assert ds.same(i, j) == (label[i] == label[j])
            r = ds.find(i)
            members = [j for j in range(n) if label[j] == label[i]]
            assert (ds.lo[r], ds.hi[r], ds.size[r]) == (min(members), max(members), len(members))


def test_from_blocks():
    ds = DisjointSets.from_blocks([1, 0, 0, 1, 1, 0])
    assert ds.blocks() == [(0, 2), (3, 3), (4, 5)]
    assert ds.finds == ds.unions == 0


def test_ba_build_w1(w1_bounds):
    tr = ba_build(w1_bounds)
    snap = tr.snapshot()
    assert snap["ba_sets"] == [(1, 1), (2, 2), (3, 3), (4, 4)]
    assert snap["a_runs"] == [(0, 0), (1, 2), (3, 4)]
    assert snap["b_runs"] == [(0, 0), (1, 1), (2, 2), (3, 4)]
    # interval 3 has slack 2 but a neighbour with slack 1, so it stores nothing
    assert snap["slack"] == {(1, 1): 1, (2, 2): 1, (4, 4): 1}
    assert tr.stored_slack(3) is None


def test_ba_build_flat_lower():
    T = 6
    tr = ba_build(PrefixBounds.from_sequences([0] * (T + 1), list(range(T + 1))))
    assert tr.snapshot()["ba_sets"] == [(t, t) for t in range(1, T + 1)]
    assert slack_table(tr) == {(1, 1): 1}
    assert all(tr.gap(t) for t in range(1, T + 1))


def test_ba_build_single_interval():
    closed = ba_build(PrefixBounds.from_sequences([0, 0], [0, 0]))
    assert slack_table(closed) == {(1, 1): 0}
    assert not closed.gap(1)
    open_ = ba_build(PrefixBounds.from_sequences([0, 1], [0, 1]))
    assert slack_table(open_) == {(1, 1): 1}


def test_ba_build_shared_block():
    tr = ba_build(PrefixBounds.from_sequences([0, 0, 0, 0], [0, 1, 1, 1]))
    assert tr.snapshot()["ba_sets"] == [(1, 3)]
    assert slack_table(tr) == {(1, 3): 1}


def test_gap_w1(w1_bounds):
    tr = DsuTracker(w1_bounds)
    assert [tr.gap(t) for t in range(1, 5)] == [True] * 4
    tr.commit(2)
    assert [tr.gap(t) for t in range(1, 5)] == [True, False, True, True]
    assert tr.arrays() == ([0, 1, 1, 1, 1], [0, 1, 1, 2, 2])
    assert tr.snapshot() == DsuTracker(PrefixBounds.from_sequences(*tr.arrays())).snapshot()
    tr.commit(1)
    assert [tr.gap(t) for t in range(1, 5)] == [False, False, True, True]
    assert tr.arrays() == ([0] * 5, [0, 0, 0, 1, 1])


def test_commit_closing_last_gap():
    tr = DsuTracker(PrefixBounds.from_sequences([0, 0, 0], [0, 1, 1]))
    tr.commit(1)
    assert not tr.gap(1) and not tr.gap(2)
    assert slack_table(tr) == {(1, 2): 0}


@pytest.mark.parametrize("seed", range(60))
def test_lockstep_with_rebuilds(seed):
    inst = fuzz_instance(seed, 1, 40, "mixed")
    pb = prefix_bounds(inst)
    if not (pb.lower <= pb.upper).all():
        return
    rng = np.random.default_rng(seed)
    # both the greedy order and an arbitrary one
    lockstep(pb, price_order(inst.price).tolist())
    lockstep(pb, (rng.permutation(inst.horizon) + 1).tolist())


@pytest.mark.parametrize("seed", range(30))
def test_operation_count_is_linear(seed):
    inst = fuzz_instance(seed, 50, 400, "mixed")
    pb = prefix_bounds(inst)
    if not (pb.lower <= pb.upper).all():
        return
    stats = solve_greedy(pb, inst.price, "dsu").stats
    assert stats["finds"] + stats["unions"] <= 12 * inst.horizon


def test_operation_count_large():
    inst = bench_instance(20000, seed=3)
    stats = solve_greedy(prefix_bounds(inst), inst.price, "dsu").stats
    assert stats["finds"] + stats["unions"] <= 12 * inst.horizon
    # each commit merges at most two block pairs
    assert stats["ba_unions"] <= 2 * stats["commits"]
