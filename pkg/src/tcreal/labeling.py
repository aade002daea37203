"""Time-label assignment over a two-spanning-tree certificate.

``pivot_label`` turns a graph plus a certificate (two all-edge-covering
spanning trees sharing at most two edges) into a proper labeling whose
strictly increasing journeys connect every ordered vertex pair:

* collection phase: the first tree, minus the central shared core, is
  labeled so labels strictly increase from the leaves toward the core;
* the core (one shared edge, or the central 4-cycle) gets the next one
  or two labels;
* distribution phase: the second tree, minus the core, is labeled so
  labels strictly increase from the core out to the leaves.

Edges outside both trees receive fresh labels above everything else, so
they can never break an existing journey.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .graphstore import (
    FLAG_BOTH,
    FLAG_T1,
    FLAG_T2,
    Certificate,
    GraphError,
    LabeledMultigraph,
)

__all__ = ["TemporalLabeling", "pivot_label", "label_plain_tree"]


@dataclass
class TemporalLabeling:
    """Edge-id -> positive label map, with the maximum label used."""

    assignment: Dict[int, int]
    max_label: int

    def apply(self, g: LabeledMultigraph) -> None:
        for e, lab in self.assignment.items():
            g.elabel[e] = lab


def _layered_order(
    g: LabeledMultigraph,
    edge_ids: Sequence[int],
    roots: Sequence[int],
) -> List[int]:
    """BFS the subgraph made of ``edge_ids`` from the root set.

    Returns, in BFS (shallowest-first) order, the discovery edge of each
    newly reached vertex.  Raises if the edges do not reach every vertex.
    """
    n = g.n
    eu, ev = g.eu, g.ev
    # Compact linked adjacency (avoids allocating n per-vertex lists).
    count = 2 * len(edge_ids)
    head = [-1] * n
    to = [0] * count
    eid = [0] * count
    nxt = [0] * count
    i = 0
    for e in edge_ids:
        u, v = eu[e], ev[e]
        to[i] = v
        eid[i] = e
        nxt[i] = head[u]
        head[u] = i
        i += 1
        to[i] = u
        eid[i] = e
        nxt[i] = head[v]
        head[v] = i
        i += 1
    seen = bytearray(n)
    order: List[int] = []
    dq: deque[int] = deque()
    for r in roots:
        if not seen[r]:
            seen[r] = 1
            dq.append(r)
    append = order.append
    push = dq.append
    while dq:
        i = head[dq.popleft()]
        while i >= 0:
            v = to[i]
            if not seen[v]:
                seen[v] = 1
                append(eid[i])
                push(v)
            i = nxt[i]
    if 0 in seen:
        raise GraphError("certificate tree does not span the graph")
    if 2 * len(order) != count:
        raise GraphError("certificate tree contains a cycle")
    return order


def _cycle_edge_ids(
    g: LabeledMultigraph, cycle: Tuple[int, int, int, int]
) -> List[int]:
    """Edge ids of the four ring edges of the central cycle, in ring order."""
    want = {}
    for i in range(4):
        a, b = cycle[i], cycle[(i + 1) % 4]
        want[(min(a, b), max(a, b))] = i
    found: List[Optional[int]] = [None] * 4
    for v in cycle:
        for e in g.incident(v):
            u, w = g.endpoints(e)
            key = (min(u, w), max(u, w))
            if key in want and found[want[key]] is None:
                found[want[key]] = e
    if any(x is None for x in found):
        raise GraphError("central cycle edges missing from the graph")
    return [x for x in found if x is not None]


def pivot_label(g: LabeledMultigraph, cert: Certificate) -> TemporalLabeling:
    """Label the graph so it is temporally connected under strict journeys.

    Requires a valid certificate: two spanning trees covering every edge,
    sharing at most two edges; two shared edges must lie on the recorded
    central 4-cycle.
    """
    if g.n == 0:
        return TemporalLabeling({}, 0)
    assignment: Dict[int, int] = {}

    if cert.central_cycle is not None:
        roots: List[int] = list(cert.central_cycle)
        central = set(_cycle_edge_ids(g, cert.central_cycle))
    elif len(cert.shared) == 1:
        (s,) = cert.shared
        roots = list(g.endpoints(s))
        central = {s}
    elif len(cert.shared) == 0:
        roots = [0]
        central = set()
    else:
        raise GraphError("more than one shared edge requires a central cycle")

    up_edges = [e for e in cert.tree1 if e not in central]
    down_edges = [e for e in cert.tree2 if e not in central]

    # Collection phase: deepest discovery edges first, so labels strictly
    # increase along every path toward the root set.
    up_order = _layered_order(g, up_edges, roots)
    t_r = len(up_order)
    assignment.update(zip(reversed(up_order), range(1, t_r + 1)))

    # Central core.
    if cert.central_cycle is not None:
        ring = _cycle_edge_ids(g, cert.central_cycle)
        # Opposite ring pairs; the pair holding the smallest edge id fires first.
        pair_a, pair_b = (ring[0], ring[2]), (ring[1], ring[3])
        if min(pair_b) < min(pair_a):
            pair_a, pair_b = pair_b, pair_a
        for e in pair_a:
            assignment[e] = t_r + 1
        for e in pair_b:
            assignment[e] = t_r + 2
    elif central:
        (s,) = central
        assignment[s] = t_r + 1

    # Distribution phase: shallowest first, strictly increasing outward.
    down_order = _layered_order(g, down_edges, roots)
    assignment.update(
        zip(down_order, range(t_r + 3, t_r + 3 + len(down_order)))
    )

    # Anything outside both trees gets fresh labels on top.
    top = max(assignment.values(), default=0)
    for e, alive in enumerate(g.ealive):
        if alive and e not in assignment:
            top += 1
            assignment[e] = top
    return TemporalLabeling(assignment, top)


def label_plain_tree(g: LabeledMultigraph, tree: Set[int]) -> TemporalLabeling:
    """Label every tree edge 1 and the rest 2, 3, ... distinctly.

    Under non-decreasing (non-strict) journeys a single all-1 spanning
    tree already connects every ordered pair.
    """
    assignment: Dict[int, int] = {}
    nxt = 2
    for e in g.edge_ids():
        if e in tree:
            assignment[e] = 1
        else:
            assignment[e] = nxt
            nxt += 1
    return TemporalLabeling(assignment, max(assignment.values(), default=0))
