"""Independent checks: labeling properties, temporal reachability,
certificate validation, and a brute-force realizability oracle.

Everything here deliberately avoids the construction code paths: the
reachability routines work from plain adjacency, and the oracle decides
realizability by exhaustive search over realizations and edge orderings,
so it can serve as ground truth for the fast recognizer.
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Set, Tuple

from .degseq import DegreeSequence, is_graphical, is_multigraphical, normalize
from .graphstore import Certificate, GraphError, LabeledMultigraph

__all__ = [
    "is_proper",
    "is_simple",
    "earliest_arrival",
    "is_tc",
    "validate_certificate",
    "oracle_tc_realizable_sequence",
    "enumerate_sequences",
    "OracleCapError",
]

INF = float("inf")


class OracleCapError(ValueError):
    """Raised when an oracle query exceeds its exhaustive-search caps."""


def _labels_of(g: LabeledMultigraph, labels: Optional[Mapping[int, int]]) -> Dict[int, int]:
    """Total label map for the live edges of g, or raise on a gap."""
    out: Dict[int, int] = {}
    for e in g.edge_ids():
        lab = labels.get(e) if labels is not None else g.elabel[e]
        if lab is None:
            raise GraphError(f"edge {e} has no label")
        out[e] = lab
    return out


def is_simple(g: LabeledMultigraph, labels: Optional[Mapping[int, int]] = None) -> bool:
    """Every edge carries exactly one positive integer label."""
    try:
        lab = _labels_of(g, labels)
    except GraphError:
        return False
    return all(isinstance(t, int) and t >= 1 for t in lab.values())


def is_proper(g: LabeledMultigraph, labels: Optional[Mapping[int, int]] = None) -> bool:
    """No two edges sharing an endpoint carry the same label."""
    lab = _labels_of(g, labels)
    for v in range(g.n):
        seen: Set[int] = set()
        for e in g.incident(v):
            t = lab[e]
            if t in seen:
                return False
            seen.add(t)
    return True


def earliest_arrival(
    g: LabeledMultigraph,
    src: int,
    labels: Optional[Mapping[int, int]] = None,
    strict: bool = True,
) -> List[float]:
    """Earliest arrival time at every vertex for journeys starting at src.

    Edges are relaxed in increasing label order.  Under ``strict`` a label-t
    edge extends only journeys that arrived before t; otherwise arrival at
    exactly t may continue, which needs a fixpoint within each label batch.
    """
    lab = _labels_of(g, labels)
    order = sorted(lab.items(), key=lambda kv: kv[1])
    arrival: List[float] = [INF] * g.n
    arrival[src] = 0
    i = 0
    while i < len(order):
        j = i
        t = order[i][1]
        while j < len(order) and order[j][1] == t:
            j += 1
        batch = order[i:j]
        if strict:
            snapshot = list(arrival)
            for e, _ in batch:
                u, v = g.endpoints(e)
                if snapshot[u] < t and arrival[v] > t:
                    arrival[v] = t
                if snapshot[v] < t and arrival[u] > t:
                    arrival[u] = t
        else:
            changed = True
            while changed:
                changed = False
                for e, _ in batch:
                    u, v = g.endpoints(e)
                    if arrival[u] <= t and arrival[v] > t:
                        arrival[v] = t
                        changed = True
                    if arrival[v] <= t and arrival[u] > t:
                        arrival[u] = t
                        changed = True
        i = j
    return arrival


def is_tc(
    g: LabeledMultigraph,
    labels: Optional[Mapping[int, int]] = None,
    strict: bool = True,
) -> bool:
    """Whether journeys exist between all ordered vertex pairs.

    Runs one pass over the label-sorted edges, propagating per-vertex
    bitsets of sources that can reach each vertex so far.
    """
    n = g.n
    if n <= 1:
        return True
    lab = _labels_of(g, labels)
    order = sorted(lab.items(), key=lambda kv: kv[1])
    full = (1 << n) - 1
    reach = [1 << v for v in range(n)]  # reach[v] = sources with a journey to v
    i = 0
    while i < len(order):
        j = i
        t = order[i][1]
        while j < len(order) and order[j][1] == t:
            j += 1
        batch = order[i:j]
        if strict:
            snap = list(reach)
            for e, _ in batch:
                u, v = g.endpoints(e)
                reach[u] |= snap[v]
                reach[v] |= snap[u]
        else:
            changed = True
            while changed:
                changed = False
                for e, _ in batch:
                    u, v = g.endpoints(e)
                    nu = reach[u] | reach[v]
                    if nu != reach[u]:
                        reach[u] = nu
                        changed = True
                    if nu != reach[v]:
                        reach[v] = nu
                        changed = True
        if all(r == full for r in reach):
            return True
        i = j
    return all(r == full for r in reach)


# -- certificate validation ----------------------------------------------------


class _DSU:
    def __init__(self, n: int):
        self.p = list(range(n))

    def find(self, x: int) -> int:
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.p[ra] = rb
        return True


def _is_spanning_tree(g: LabeledMultigraph, edges: Set[int]) -> bool:
    if g.n == 0:
        return len(edges) == 0
    if len(edges) != g.n - 1:
        return False
    dsu = _DSU(g.n)
    for e in edges:
        try:
            u, v = g.endpoints(e)
        except GraphError:
            return False
        if not dsu.union(u, v):
            return False  # cycle
    return True  # n-1 acyclic edges on n vertices must span


def validate_certificate(g: LabeledMultigraph, cert: Certificate) -> bool:
    """Both edge sets are spanning trees with the declared shared core.

    With two shared edges, the central 4-cycle must be present, induced
    (all four cycle edges of multiplicity one, no chord), and carry both
    shared edges.  Matching pairs, when present, must each combine one
    off-cycle edge per tree with no common endpoint.
    """
    if not _is_spanning_tree(g, cert.tree1):
        return False
    if not _is_spanning_tree(g, cert.tree2):
        return False
    shared = cert.tree1 & cert.tree2
    if shared != cert.shared or len(shared) > 2:
        return False
    cycle_edges: Set[int] = set()
    if len(shared) == 2:
        if cert.central_cycle is None:
            return False
        cyc = cert.central_cycle
        if len(set(cyc)) != 4 or any(not 0 <= x < g.n for x in cyc):
            return False
        cyc_pairs = [frozenset((cyc[i], cyc[(i + 1) % 4])) for i in range(4)]
        chord_pairs = {frozenset((cyc[0], cyc[2])), frozenset((cyc[1], cyc[3]))}
        pair_to_edges: Dict[frozenset, List[int]] = {p: [] for p in cyc_pairs}
        for e in g.edge_ids():
            key = frozenset(g.endpoints(e))
            if key in pair_to_edges:
                pair_to_edges[key].append(e)
            if key in chord_pairs:
                return False  # chord: the 4-cycle is not induced
        for p in cyc_pairs:
            if len(pair_to_edges[p]) != 1:
                return False  # missing or multiple copies of a cycle edge
            cycle_edges.add(pair_to_edges[p][0])
        if not shared <= cycle_edges:
            return False
    elif cert.central_cycle is not None:
        return False
    if cert.matching_pairs is not None:
        if len(shared) != 2:
            return False
        for pair in cert.matching_pairs:
            e1, e2 = pair
            if e1 in cycle_edges or e2 in cycle_edges:
                return False
            if e1 not in cert.tree1 or e2 not in cert.tree2:
                return False
            try:
                a, b = g.endpoints(e1)
                c, d = g.endpoints(e2)
            except GraphError:
                return False
            if {a, b} & {c, d}:
                return False
    return True


# -- exhaustive realizability oracle -------------------------------------------


def _enumerate_realizations(
    degrees: Sequence[int], multi: bool
) -> Iterator[Tuple[Tuple[int, int], ...]]:
    """All multisets of edges realizing the degree list on labeled vertices.

    Backtracks over vertex pairs in lexicographic order with residual
    degrees; multigraph multiplicities are bounded by the smaller residual
    endpoint degree.
    """
    n = len(degrees)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    residual = list(degrees)
    out: List[Tuple[int, int]] = []

    def rest_capacity(idx: int, v: int) -> int:
        cap = 0
        for k in range(idx, len(pairs)):
            i, j = pairs[k]
            if v == i or v == j:
                other = j if v == i else i
                cap += min(residual[v], residual[other]) if multi else 1
        return cap

    def dfs(idx: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
        if idx == len(pairs):
            if all(r == 0 for r in residual):
                yield tuple(out)
            return
        i, j = pairs[idx]
        # Once the scan moves past vertex i's last pair, i must be settled.
        if j == i + 1 and i > 0 and residual[i - 1] != 0:
            return
        hi = min(residual[i], residual[j]) if multi else min(residual[i], residual[j], 1)
        for mult in range(hi, -1, -1):
            residual[i] -= mult
            residual[j] -= mult
            out.extend([(i, j)] * mult)
            # Vertex i only has pairs with larger j left; check feasibility.
            if residual[i] <= rest_capacity(idx + 1, i):
                yield from dfs(idx + 1)
            for _ in range(mult):
                out.pop()
            residual[i] += mult
            residual[j] += mult

    yield from dfs(0)


def _degree_preserving_perms(degrees: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """All vertex permutations that map each vertex to one of equal degree."""
    n = len(degrees)
    groups: Dict[int, List[int]] = {}
    for v, d in enumerate(degrees):
        groups.setdefault(d, []).append(v)
    blocks = list(groups.values())
    for combo in itertools.product(*(itertools.permutations(b) for b in blocks)):
        perm = [0] * n
        for block, images in zip(blocks, combo):
            for src, dst in zip(block, images):
                perm[src] = dst
        yield tuple(perm)


def _canonical_signature(
    edges: Tuple[Tuple[int, int], ...], degrees: Sequence[int]
) -> Tuple[Tuple[int, int], ...]:
    best = None
    for perm in _degree_preserving_perms(degrees):
        sig = tuple(
            sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges)
        )
        if best is None or sig < best:
            best = sig
    assert best is not None
    return best


def _is_connected(n: int, edges: Sequence[Tuple[int, int]]) -> bool:
    if n <= 1:
        return True
    dsu = _DSU(n)
    comps = n
    for u, v in edges:
        if dsu.union(u, v):
            comps -= 1
    return comps == 1


def _tc_orderable(n: int, edges: Tuple[Tuple[int, int], ...]) -> bool:
    """Whether some ordering of the edges yields journeys for all pairs.

    Distinct per-edge times are enough to consider: any labeling with ties
    between non-adjacent edges refines to an order with the same journeys.
    Search is a memoized DFS over (placed-edge set, reach bitsets).
    """
    if n <= 1:
        return True
    if not _is_connected(n, edges):
        return False
    m = len(edges)
    full = (1 << n) - 1
    inc = [0] * n
    for idx, (u, v) in enumerate(edges):
        inc[u] |= 1 << idx
        inc[v] |= 1 << idx
    memo: Dict[Tuple[int, Tuple[int, ...]], bool] = {}

    def dfs(remaining: int, reach: Tuple[int, ...]) -> bool:
        if all(r == full for r in reach):
            return True
        if remaining == 0:
            return False
        key = (remaining, reach)
        cached = memo.get(key)
        if cached is not None:
            return cached
        # A vertex nobody new can ever enter again is a dead end.
        for v in range(n):
            if reach[v] != full and not (remaining & inc[v]):
                memo[key] = False
                return False
        tried: Set[Tuple[int, int]] = set()
        rem = remaining
        ok = False
        while rem:
            bit = rem & -rem
            rem ^= bit
            idx = bit.bit_length() - 1
            uv = edges[idx]
            if uv in tried:
                continue  # a parallel copy behaves identically here
            tried.add(uv)
            u, v = uv
            nxt = list(reach)
            nxt[u] |= reach[v]
            nxt[v] |= reach[u]
            if dfs(remaining ^ bit, tuple(nxt)):
                ok = True
                break
        memo[key] = ok
        return ok

    return dfs((1 << m) - 1, tuple(1 << v for v in range(n)))


def oracle_tc_realizable_sequence(
    d: DegreeSequence | Sequence[int],
    mode: str = "simple",
    cap_n: int = 6,
    cap_m: int = 9,
) -> bool:
    """Ground-truth realizability by exhaustive search at tiny scale.

    Enumerates realizations (up to degree-preserving relabeling) and, for
    each connected one, searches for an edge ordering whose journeys cover
    all ordered vertex pairs.
    """
    if mode not in ("simple", "multi"):
        raise ValueError(f"unknown mode {mode!r}")
    degrees = list(d.entries) if isinstance(d, DegreeSequence) else sorted(d, reverse=True)
    n = len(degrees)
    total = sum(degrees)
    if n > cap_n or total // 2 > cap_m:
        raise OracleCapError(
            f"oracle caps exceeded (n={n} > {cap_n} or m={total // 2} > {cap_m})"
        )
    ds = normalize(degrees)
    if mode == "simple" and not is_graphical(ds):
        return False
    if mode == "multi" and not is_multigraphical(ds):
        return False
    if n <= 1:
        return True
    if degrees[-1] == 0:
        return False  # an isolated vertex is unreachable
    seen: Set[Tuple[Tuple[int, int], ...]] = set()
    for edges in _enumerate_realizations(degrees, mode == "multi"):
        if not _is_connected(n, edges):
            continue
        sig = _canonical_signature(edges, degrees)
        if sig in seen:
            continue
        seen.add(sig)
        if _tc_orderable(n, sig):
            return True
    return False


def enumerate_sequences(n: int, mode: str = "simple") -> Iterator[DegreeSequence]:
    """Every realizable-as-a-graph degree sequence of length n, sorted.

    Simple mode caps entries at n-1; multigraph mode caps entries at 2n to
    keep the stream finite.
    """
    if n > 12:
        raise ValueError("sequence enumeration is capped at n <= 12")
    if mode not in ("simple", "multi"):
        raise ValueError(f"unknown mode {mode!r}")
    if n == 0:
        yield normalize([])
        return
    max_deg = n - 1 if mode == "simple" else 2 * n
    test = is_graphical if mode == "simple" else is_multigraphical
    for combo in itertools.combinations_with_replacement(range(max_deg, -1, -1), n):
        ds = normalize(combo)
        if test(ds):
            yield ds
