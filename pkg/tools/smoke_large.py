import os
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
os.environ["TCREAL_DEBUG_ASSERT"] = "1"

from tcreal.degseq import DegreeSequence
from tcreal import realize as rz
from tcreal import verify as vf


def full_check(tup, mode, expect_reason=None):
    d = DegreeSequence(tup)
    res = rz.realize_tc(d, mode)
    assert res.realizable, (tup, mode, res.decision)
    if expect_reason:
        assert res.decision.reason == expect_reason, (tup, res.decision)
    g, cert, lab = res.graph, res.certificate, res.labeling
    assert sorted(g.degrees(), reverse=True) == list(d.entries)
    assert g.validate()
    assert vf.is_proper(g)
    if mode == "simple":
        assert vf.is_simple(g)
    assert vf.validate_certificate(g, cert), (tup, mode)
    assert vf.is_tc(g), (tup, mode)
    tree_covered = all(g.eflag[e] != 0 for e in g.edge_ids())
    if tree_covered:
        assert lab.max_label <= 2 * len(tup) + 2, (tup, lab.max_label)
    return res


# Targeted families hitting every construction route.
cases = [
    # one-shared all-3 family with wheel (n >= 9)
    (tuple([9 - 3] + [3] * 8), "simple"),   # n=9 -> wheel k=3
    (tuple([12 - 3] + [3] * 11), "simple"), # n=12 wheel k=6
    # one-shared deg-3 with d2 >= 4 (hub over pendant)
    ((4, 4, 4, 4, 3, 3, 3, 3, 3, 3), "simple"),
    ((5, 5, 4, 3, 3, 3, 3, 3, 3, 3, 3), "simple"),
    # C4 all-3 family n=8..12
    (tuple([3] * 8), "simple"),
    (tuple([4] + [3] * 8), "simple"),
    (tuple([4, 4] + [3] * 8), "simple"),
    (tuple([4, 4, 4, 4] + [3] * 8), "simple"),
    # C4 hub gadget (d1 >= 5, dn = 3)
    ((5, 4, 3, 3, 3, 3, 3, 3, 3, 3, 3), "simple"),
    ((6, 5, 4, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3), "simple"),
    # C4 via descent of 2s into all-3 or gadget bases
    ((4, 4, 3, 3, 3, 3, 3, 3, 2), "simple"),
    ((6, 5, 3, 3, 3, 3, 3, 3, 3, 3, 3, 2), "simple"),
    # multi C4 gadget
    ((6, 2, 2, 2, 2, 2), "multi"),
    ((8, 4, 2, 2, 2, 2, 2, 2), "multi"),
    ((3, 3, 2, 2, 2), "multi"),
    ((2, 2, 2, 2), "multi"),
    # multi one-shared subdivision route
    ((3, 3, 2, 2), "multi"),
    ((6, 4, 2, 2, 2), "multi"),
    # multi pendant
    ((5, 3, 3, 2, 1), "multi"),
    # surplus-heavy multi
    ((9, 9, 2), "multi"),
    ((7, 7), "multi"),
]
for tup, mode in cases:
    s = sum(tup)
    assert s % 2 == 0, tup
    full_check(tup, mode)
print("targeted cases ok")


def random_realizable(rng, n, mode):
    """Rejection-sample a realizable sequence of length n."""
    while True:
        kind = rng.randrange(4)
        if kind == 0:  # boundary C4-ish
            target = 4 * (n - 1) - 4
        elif kind == 1:
            target = 4 * (n - 1) - 2
        else:
            target = 4 * (n - 1) + 2 * rng.randrange(0, n)
        vals = [2] * n
        rem = target - 2 * n
        if rem < 0:
            continue
        for _ in range(rem):
            i = rng.randrange(n)
            vals[i] += 1
        if max(vals) >= n and mode == "simple":
            continue
        d = DegreeSequence(vals)
        if rz.check_tc_realizable(d, mode).realizable:
            return tuple(sorted(vals, reverse=True))


rng = random.Random(12345)
t0 = time.time()
for trial in range(400):
    n = rng.randrange(3, 60)
    mode = "simple" if trial % 2 == 0 else "multi"
    tup = random_realizable(rng, n, mode)
    full_check(tup, mode)
print("random medium ok", round(time.time() - t0, 1), "s")

for trial in range(40):
    n = rng.randrange(60, 200)
    mode = "simple" if trial % 2 == 0 else "multi"
    tup = random_realizable(rng, n, mode)
    full_check(tup, mode)
print("random large ok")

# Non-strict mode.
import itertools
for n in range(0, 8):
    for tup in itertools.combinations_with_replacement(range(n - 1 if n else 0, -1, -1), n):
        for mode in ("simple", "multi"):
            d = DegreeSequence(tup)
            res = rz.realize_nonstrict(d, mode)
            graphical = vf and (rz.is_graphical(d) if mode == "simple" else rz.is_multigraphical(d))
            expect = graphical and (n <= 1 or (sum(tup) // 2 >= n - 1 and min(tup) >= 1))
            assert res.realizable == bool(expect), (tup, mode, res.decision)
            if res.realizable:
                g = res.graph
                assert sorted(g.degrees(), reverse=True) == list(d.entries), (tup, mode)
                assert g.validate()
                assert vf.is_tc(g, strict=False), (tup, mode)
print("nonstrict ok")

# Multi nonstrict with parallel-heavy sequences.
for tup in [(4, 4), (4, 2, 2), (5, 3, 2, 2), (2, 2, 2), (3, 3)]:
    res = rz.realize_nonstrict(DegreeSequence(tup), "multi")
    assert res.realizable and vf.is_tc(res.graph, strict=False), tup
print("nonstrict multi ok")
