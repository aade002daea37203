"""Frozen base realizations used by the constructions.

The small figure-style bases were derived once by exhaustive search over
realizations and tree splits (the search lives in the test suite and can
regenerate them); everything here is a plain edge list with tree flags.

Fixture format: n, edges as (u, v) pairs, tree edge-id lists, and where
relevant the central 4-cycle and the off-cycle matching pairs.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .graphstore import (
    FLAG_BOTH,
    FLAG_NONE,
    FLAG_T1,
    FLAG_T2,
    LabeledMultigraph,
)

__all__ = [
    "instantiate",
    "K4_EDST",
    "C4_BASE",
    "TRIANGLE_ONE_SHARED",
    "MULTI_22",
    "MULTI_332",
    "MULTI_422",
    "ONE_SHARED_DEG3",
    "C4_ALL3_8",
    "C4_GADGET_EDGES",
    "C4_GADGET_SPLIT",
]

# Complete graph on 4 vertices: two edge-disjoint spanning trees
# (path 0-1-2-3 and the star-ish tree {02, 03, 13}).
K4_EDST = {
    "n": 4,
    "edges": [(0, 1), (1, 2), (2, 3), (0, 2), (0, 3), (1, 3)],
    "tree1": [0, 1, 2],
    "tree2": [3, 4, 5],
    "shared": [],
}

# The 4-cycle: two spanning paths sharing the two opposite edges 01 and 23.
C4_BASE = {
    "n": 4,
    "edges": [(0, 1), (1, 2), (2, 3), (3, 0)],
    "tree1": [0, 1, 2],
    "tree2": [2, 3, 0],
    "shared": [0, 2],
    "cycle": (0, 1, 2, 3),
}

# Triangle: two spanning paths sharing one edge.
TRIANGLE_ONE_SHARED = {
    "n": 3,
    "edges": [(0, 1), (1, 2), (2, 0)],
    "tree1": [0, 1],
    "tree2": [0, 2],
    "shared": [0],
}

# Two parallel edges: one tree each.
MULTI_22 = {
    "n": 2,
    "edges": [(0, 1), (0, 1)],
    "tree1": [0],
    "tree2": [1],
    "shared": [],
}

# Double edge 0-1 plus the path 0-2-1: edge-disjoint spanning trees.
MULTI_332 = {
    "n": 3,
    "edges": [(0, 1), (0, 1), (0, 2), (1, 2)],
    "tree1": [0, 2],
    "tree2": [1, 3],
    "shared": [],
}

# Double edges 0-1 and 0-2: each tree takes one copy of each.
MULTI_422 = {
    "n": 3,
    "edges": [(0, 1), (0, 1), (0, 2), (0, 2)],
    "tree1": [0, 2],
    "tree2": [1, 3],
    "shared": [],
}

# One-shared-edge realizations for the boundary family whose sequence is
# (n-3, 3, 3, ..., 3), for n in {6, 7, 8} (derived by exhaustive search).
ONE_SHARED_DEG3: Dict[int, dict] = {
    6: {
        "n": 6,
        "edges": [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
        "tree1": [0, 1, 2, 4, 7],
        "tree2": [0, 3, 5, 6, 8],
        "shared": [0],
    },
    7: {
        "n": 7,
        "edges": [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 5), (3, 6), (4, 5), (4, 6), (5, 6)],
        "tree1": [0, 1, 2, 3, 6, 9],
        "tree2": [0, 4, 5, 7, 8, 10],
        "shared": [0],
    },
    8: {
        "n": 8,
        "edges": [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (2, 3), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)],
        "tree1": [0, 1, 3, 4, 6, 8, 11],
        "tree2": [2, 3, 5, 7, 9, 10, 12],
        "shared": [3],
    },
}

# 8-vertex all-degree-3 realization with an induced central 4-cycle, two
# spanning trees sharing exactly the two cycle edges 01 and 14, and two
# endpoint-disjoint cross-tree off-cycle pairs (derived by search).
C4_ALL3_8 = {
    "n": 8,
    "edges": [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (3, 6), (4, 7), (5, 6), (5, 7), (6, 7)],
    "tree1": [0, 1, 2, 4, 5, 7, 10],
    "tree2": [0, 3, 4, 6, 8, 9, 11],
    "shared": [0, 4],
    "cycle": (0, 1, 4, 3),
    "pairs": ((1, 8), (5, 11)),
}

# Hub gadget: a designated hub vertex plus a 6-cycle (x, y, z, z2, y2, x2)
# with extra edges hub-x, hub-z, y-y2, x2-z2.  Vertices are listed in the
# order (hub, x, y, z, z2, y2, x2); the central cycle is (hub, x, y, z).
C4_GADGET_EDGES: List[Tuple[int, int]] = [
    (0, 1), (1, 2), (2, 3), (3, 0),   # central cycle
    (3, 4), (4, 5), (5, 6), (6, 1),   # rest of the 6-cycle
    (2, 5), (6, 4),
]

# Split of the 10 gadget edges into two 6-edge trees spanning the 6 added
# vertices from the hub, sharing exactly the cycle edges hub-x and x-y.
C4_GADGET_SPLIT = {
    "tree1": [0, 1, 2, 4, 5, 6],
    "tree2": [0, 1, 3, 7, 8, 9],
    "shared": [0, 1],
}


def instantiate(fixture: dict, mode: str) -> LabeledMultigraph:
    """Materialize a fixture into a graph with tree flags set."""
    g = LabeledMultigraph(mode)
    for _ in range(fixture["n"]):
        g.add_vertex()
    t1 = set(fixture["tree1"])
    t2 = set(fixture["tree2"])
    for i, (u, v) in enumerate(fixture["edges"]):
        flag = FLAG_NONE
        if i in t1 and i in t2:
            flag = FLAG_BOTH
        elif i in t1:
            flag = FLAG_T1
        elif i in t2:
            flag = FLAG_T2
        g.add_edge(u, v, flag)
    cyc: Optional[Tuple[int, int, int, int]] = fixture.get("cycle")
    g.central_cycle = cyc
    return g
