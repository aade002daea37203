#!/usr/bin/env python3
"""Walkthrough: the whole pipeline runs in linear time.

Builds and labels realizations of the family (4, 4, ..., 4, 2, 2) at
doubling sizes and reports wall time per size. The per-step ratio
should hover around 2x.

Run:  python3 demos/03_scaling.py
"""

import time

from tcreal import DegreeSequence, realize_tc

SIZES = [25_000, 50_000, 100_000, 200_000]


def main() -> None:
    prev = None
    print(f"{'n':>9}  {'edges':>9}  {'seconds':>8}  ratio")
    for n in SIZES:
        d = DegreeSequence([4] * (n - 2) + [2, 2])
        t0 = time.perf_counter()
        res = realize_tc(d, "simple")
        dt = time.perf_counter() - t0
        assert res.realizable
        ratio = f"{dt / prev:5.2f}" if prev else "    -"
        print(f"{n:>9}  {res.graph.num_edges:>9}  {dt:8.3f}  {ratio}")
        prev = dt


if __name__ == "__main__":
    main()
