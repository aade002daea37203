"""Derive the hardcoded base realizations by exhaustive search and print
them as Python literals for freezing into the package.

Each search is fully deterministic: realizations are enumerated in a
fixed order and the first structure satisfying all required properties
wins.
"""

import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from tcreal.verify import _enumerate_realizations, _is_connected, _DSU  # noqa: E402


def is_spanning_tree(n, edge_list, ids):
    if len(ids) != n - 1:
        return False
    dsu = _DSU(n)
    for i in ids:
        u, v = edge_list[i]
        if not dsu.union(u, v):
            return False
    return True


def find_one_shared(degrees):
    """First realization of `degrees` with two all-edge-covering spanning
    trees sharing exactly one edge."""
    n = len(degrees)
    m = sum(degrees) // 2
    half = n - 2
    for edges in _enumerate_realizations(degrees, False):
        if not _is_connected(n, edges):
            continue
        eids = list(range(m))
        for s in eids:
            rest = [i for i in eids if i != s]
            # Force the lowest remaining edge into T1 to kill the swap symmetry.
            fixed = rest[0]
            for combo in itertools.combinations(rest[1:], half - 1):
                t1 = {s, fixed, *combo}
                t2 = {s} | (set(rest) - t1)
                if is_spanning_tree(n, edges, t1) and is_spanning_tree(n, edges, t2):
                    return edges, sorted(t1), sorted(t2), s
    return None


def induced_c4s(n, edges):
    eset = {frozenset(e) for e in edges}
    out = []
    for quad in itertools.combinations(range(n), 4):
        for perm in itertools.permutations(quad[1:]):
            cyc = (quad[0],) + perm
            if cyc[1] > cyc[3]:
                continue  # each cycle twice otherwise (reflection)
            ring = [frozenset((cyc[i], cyc[(i + 1) % 4])) for i in range(4)]
            chords = [frozenset((cyc[0], cyc[2])), frozenset((cyc[1], cyc[3]))]
            if all(r in eset for r in ring) and not any(c in eset for c in chords):
                out.append(cyc)
    return out


def find_c4_base(degrees):
    """First realization with an induced 4-cycle, two spanning trees
    covering all edges and sharing exactly two cycle edges, and two
    endpoint-disjoint cross-tree off-cycle edge pairs."""
    n = len(degrees)
    m = sum(degrees) // 2
    for edges in _enumerate_realizations(degrees, False):
        if not _is_connected(n, edges):
            continue
        pair_of = {frozenset(e): i for i, e in enumerate(edges)}
        for cyc in induced_c4s(n, edges):
            ring_ids = [pair_of[frozenset((cyc[i], cyc[(i + 1) % 4]))] for i in range(4)]
            for shared in itertools.combinations(ring_ids, 2):
                rest = [i for i in range(m) if i not in shared]
                k = n - 1 - 2  # off-shared edges per tree
                fixed = rest[0]
                for combo in itertools.combinations(rest[1:], k - 1):
                    t1 = set(shared) | {fixed, *combo}
                    t2 = set(shared) | (set(rest) - t1)
                    if not (is_spanning_tree(n, edges, t1) and is_spanning_tree(n, edges, t2)):
                        continue
                    ring = set(ring_ids)
                    off1 = sorted(t1 - ring)
                    off2 = sorted(t2 - ring)
                    for e1, f1 in itertools.permutations(off1, 2):
                        for e2, f2 in itertools.permutations(off2, 2):
                            if set(edges[e1]) & set(edges[e2]):
                                continue
                            if set(edges[f1]) & set(edges[f2]):
                                continue
                            return (edges, sorted(t1), sorted(t2), list(shared),
                                    cyc, ((e1, e2), (f1, f2)))
    return None


GADGET_EDGES = [
    ("v1", "x"), ("x", "y"), ("y", "z"), ("z", "v1"),   # central cycle
    ("z", "z2"), ("z2", "y2"), ("y2", "x2"), ("x2", "x"),  # rest of the 6-cycle
    ("y", "y2"), ("x2", "z2"),
]


def find_c4_gadget_split():
    """Split the 10-edge hub gadget into two 6-edge trees sharing exactly
    two central-cycle edges, together spanning all 6 added vertices from
    the hub and using every gadget edge."""
    names = ["v1", "x", "y", "z", "z2", "y2", "x2"]
    idx = {s: i for i, s in enumerate(names)}
    edges = [(idx[a], idx[b]) for a, b in GADGET_EDGES]
    n = 7
    ring = [0, 1, 2, 3]
    for shared in itertools.combinations(ring, 2):
        rest = [i for i in range(10) if i not in shared]
        fixed = rest[0]
        for combo in itertools.combinations(rest[1:], 3):
            s1 = set(shared) | {fixed, *combo}
            s2 = set(shared) | (set(rest) - s1)
            if is_spanning_tree(n, edges, s1) and is_spanning_tree(n, edges, s2):
                return sorted(s1), sorted(s2), list(shared)
    return None


def main():
    for degs, name in [
        ([3, 3, 3, 3, 3, 3], "ONE_SHARED_6"),
        ([4, 3, 3, 3, 3, 3, 3], "ONE_SHARED_7"),
        ([5, 3, 3, 3, 3, 3, 3, 3], "ONE_SHARED_8"),
    ]:
        res = find_one_shared(degs)
        edges, t1, t2, s = res
        print(f"{name} = {{'n': {len(degs)}, 'edges': {list(edges)},")
        print(f"    'tree1': {t1}, 'tree2': {t2}, 'shared': [{s}]}}")
    res = find_c4_base([3] * 8)
    edges, t1, t2, shared, cyc, pairs = res
    print(f"C4_ALL3_8 = {{'n': 8, 'edges': {list(edges)},")
    print(f"    'tree1': {t1}, 'tree2': {t2}, 'shared': {shared},")
    print(f"    'cycle': {tuple(cyc)}, 'pairs': {pairs}}}")
    s1, s2, shared = find_c4_gadget_split()
    print(f"C4_GADGET_SPLIT = {{'tree1': {s1}, 'tree2': {s2}, 'shared': {shared}}}")


if __name__ == "__main__":
    main()
