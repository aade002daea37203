"""Multigraph storage with degree buckets, tree flags, and time labels.

The constructions repeatedly ask "give me a vertex whose current degree is
x"; the store answers this from a per-degree bucket index.  Buckets are
plain stacks of vertex ids with lazy invalidation (a popped id is valid
only if the vertex still has that degree), which keeps every attach
amortized proportional to the number of requested targets.  Ties between
vertices of equal degree break deterministically (most recently pushed
wins), which is all the constructions need.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

__all__ = [
    "FLAG_NONE",
    "FLAG_T1",
    "FLAG_T2",
    "FLAG_BOTH",
    "LabeledMultigraph",
    "Certificate",
    "GraphError",
]

FLAG_NONE = 0
FLAG_T1 = 1
FLAG_T2 = 2
FLAG_BOTH = 3

_FLAG_NAMES = {FLAG_NONE: "none", FLAG_T1: "t1", FLAG_T2: "t2", FLAG_BOTH: "both"}
_FLAG_VALUES = {v: k for k, v in _FLAG_NAMES.items()}


class GraphError(ValueError):
    """Raised when a graph operation violates the store's contracts."""


@dataclass
class Certificate:
    """Structural witness: two spanning trees plus the shared-edge core.

    ``matching_pairs`` is construction-internal bookkeeping for the
    boundary induction; each pair holds one tree-1 edge and one tree-2
    edge, neither on the central cycle, forming a matching.
    """

    tree1: Set[int] = field(default_factory=set)
    tree2: Set[int] = field(default_factory=set)
    shared: Set[int] = field(default_factory=set)
    central_cycle: Optional[Tuple[int, int, int, int]] = None
    matching_pairs: Optional[Tuple[Tuple[int, int], Tuple[int, int]]] = None


class LabeledMultigraph:
    """Undirected (multi)graph with per-edge identity, flags, and labels."""

    def __init__(self, mode: str = "simple"):
        if mode not in ("simple", "multi"):
            raise GraphError(f"unknown mode {mode!r}")
        self.mode = mode
        self.eu: List[int] = []
        self.ev: List[int] = []
        self.eflag: List[int] = []
        self.elabel: List[Optional[int]] = []
        self.ealive: List[bool] = []
        self.adj: List[List[int]] = []
        self.vdeg: List[int] = []
        self._buckets: Dict[int, List[int]] = {}
        self._pairs: Set[int] = set()  # simple mode: packed endpoint pairs
        self.central_cycle: Optional[Tuple[int, int, int, int]] = None
        self.ops = 0  # bucket/edge primitive counter for linearity checks

    # -- basic accessors ------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vdeg)

    @property
    def num_edges(self) -> int:
        return sum(1 for a in self.ealive if a)

    def edge_ids(self) -> Iterator[int]:
        for e, alive in enumerate(self.ealive):
            if alive:
                yield e

    def endpoints(self, e: int) -> Tuple[int, int]:
        if not (0 <= e < len(self.eu)) or not self.ealive[e]:
            raise GraphError(f"unknown edge id {e}")
        return self.eu[e], self.ev[e]

    def incident(self, v: int) -> List[int]:
        """Live edge ids incident to v (compacts lazily-deleted entries)."""
        live = [e for e in self.adj[v] if self.ealive[e]]
        self.adj[v] = live
        return live

    def degree(self, v: int) -> int:
        return self.vdeg[v]

    def degrees(self) -> List[int]:
        return list(self.vdeg)

    def _pair_key(self, u: int, v: int) -> int:
        a, b = (u, v) if u < v else (v, u)
        return a * (1 << 32) + b

    # -- vertex / edge mutation ----------------------------------------------

    def add_vertex(self) -> int:
        v = len(self.vdeg)
        self.vdeg.append(0)
        self.adj.append([])
        self._bucket_push(0, v)
        return v

    def _bucket_push(self, deg: int, v: int) -> None:
        self.ops += 1
        bucket = self._buckets.get(deg)
        if bucket is None:
            self._buckets[deg] = [v]
        else:
            bucket.append(v)

    def add_edge(self, u: int, v: int, flag: int = FLAG_NONE) -> int:
        if u == v:
            raise GraphError("self-loops are not allowed")
        vdeg = self.vdeg
        n = len(vdeg)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"unknown endpoint in ({u}, {v})")
        if self.mode == "simple":
            key = u * 4294967296 + v if u < v else v * 4294967296 + u
            pairs = self._pairs
            if key in pairs:
                raise GraphError(f"parallel edge ({u}, {v}) in simple mode")
            pairs.add(key)
        e = len(self.eu)
        self.eu.append(u)
        self.ev.append(v)
        self.eflag.append(flag)
        self.elabel.append(None)
        self.ealive.append(True)
        adj = self.adj
        adj[u].append(e)
        adj[v].append(e)
        buckets = self._buckets
        du = vdeg[u] + 1
        vdeg[u] = du
        bucket = buckets.get(du)
        if bucket is None:
            buckets[du] = [u]
        else:
            bucket.append(u)
        dv = vdeg[v] + 1
        vdeg[v] = dv
        bucket = buckets.get(dv)
        if bucket is None:
            buckets[dv] = [v]
        else:
            bucket.append(v)
        self.ops += 4
        return e

    def remove_edge(self, e: int) -> None:
        u, v = self.endpoints(e)
        self.ealive[e] = False
        self.eflag[e] = FLAG_NONE
        if self.mode == "simple":
            self._pairs.discard(self._pair_key(u, v))
        for x in (u, v):
            self.vdeg[x] -= 1
            self._bucket_push(self.vdeg[x], x)
        self.ops += 2

    def subdivide_edge(self, e: int) -> Tuple[int, Tuple[int, int]]:
        """Replace edge e by a new degree-2 vertex joined to both endpoints.

        The two new edges inherit no flags; the caller sets them.
        """
        u, v = self.endpoints(e)
        self.remove_edge(e)
        w = self.add_vertex()
        e1 = self.add_edge(u, w)
        e2 = self.add_edge(w, v)
        return w, (e1, e2)

    def replace_edge_with_degree3_vertex(
        self, u: int, pick: int
    ) -> Tuple[int, int]:
        """Fused step: add a vertex w joined to u (tree 1) and to both
        endpoints of edge ``pick`` (tree 2), deleting ``pick``.

        Equivalent to remove_edge + add_vertex + three add_edge calls,
        but skips bucket updates for the two endpoints of ``pick`` whose
        degrees are unchanged overall.  Returns (w, first tree-2 edge).
        """
        eu, ev = self.eu, self.ev
        if not self.ealive[pick]:
            raise GraphError(f"unknown edge id {pick}")
        a, b = eu[pick], ev[pick]
        if u == a or u == b:
            raise GraphError("replacement edge must avoid the tree-1 anchor")
        self.ealive[pick] = False
        self.eflag[pick] = FLAG_NONE
        vdeg = self.vdeg
        w = len(vdeg)
        if self.mode == "simple":
            pairs = self._pairs
            pairs.discard(
                a * 4294967296 + b if a < b else b * 4294967296 + a
            )
            # The new edges cannot clash (w is brand new) but must enter
            # the pair index so later additions are checked against them.
            base = w  # w exceeds every existing vertex id
            pairs.add(u * 4294967296 + base)
            pairs.add(a * 4294967296 + base)
            pairs.add(b * 4294967296 + base)
        e1 = len(eu)
        eu.append(u)
        ev.append(w)
        eu.append(a)
        ev.append(w)
        eu.append(b)
        ev.append(w)
        self.eflag.extend((FLAG_T1, FLAG_T2, FLAG_T2))
        self.elabel.extend((None, None, None))
        self.ealive.extend((True, True, True))
        adj = self.adj
        adj[u].append(e1)
        adj[a].append(e1 + 1)
        adj[b].append(e1 + 2)
        adj.append([e1, e1 + 1, e1 + 2])
        vdeg.append(3)
        du = vdeg[u] + 1
        vdeg[u] = du
        buckets = self._buckets
        bucket = buckets.get(du)
        if bucket is None:
            buckets[du] = [u]
        else:
            bucket.append(u)
        bucket = buckets.get(3)
        if bucket is None:
            buckets[3] = [w]
        else:
            bucket.append(w)
        self.ops += 6
        return w, e1 + 1

    def replay_degree3_insertions(
        self, old_maxima: Sequence[int], t2_pair: Tuple[int, int]
    ) -> Tuple[int, int]:
        """Insert one degree-3 vertex per entry of ``old_maxima``.

        For each old maximum d1: pick a vertex u of current degree d1 - 1,
        choose from ``t2_pair`` (two vertex-disjoint tree-2 edges) one edge
        avoiding u, and run ``replace_edge_with_degree3_vertex`` on it.
        The pair is maintained by replacing the used edge with one of the
        two new tree-2 edges; the updated pair is returned.  Batched with
        hoisted locals because this is the inner loop of the tight-sum
        construction.
        """
        eu, ev = self.eu, self.ev
        eflag, elabel, ealive = self.eflag, self.elabel, self.ealive
        adj, vdeg = self.adj, self.vdeg
        buckets = self._buckets
        pairs = self._pairs
        simple = self.mode == "simple"
        pick, other = t2_pair
        for d1 in old_maxima:
            x = d1 - 1
            bucket = buckets.get(x)
            u = -1
            while bucket:
                v0 = bucket[-1]
                if vdeg[v0] == x:
                    u = v0
                    break
                bucket.pop()  # stale
            if u < 0:
                raise GraphError(f"no vertex of degree {x}")
            if u == eu[pick] or u == ev[pick]:
                pick, other = other, pick
            a, b = eu[pick], ev[pick]
            ealive[pick] = False
            eflag[pick] = FLAG_NONE
            w = len(vdeg)
            if simple:
                pairs.discard(
                    a * 4294967296 + b if a < b else b * 4294967296 + a
                )
                # w exceeds every existing vertex id, so it is the high
                # half of each new pair key.
                pairs.add(u * 4294967296 + w)
                pairs.add(a * 4294967296 + w)
                pairs.add(b * 4294967296 + w)
            e1 = len(eu)
            eu.append(u)
            ev.append(w)
            eu.append(a)
            ev.append(w)
            eu.append(b)
            ev.append(w)
            eflag += (FLAG_T1, FLAG_T2, FLAG_T2)
            elabel += (None, None, None)
            ealive += (True, True, True)
            adj[u].append(e1)
            adj[a].append(e1 + 1)
            adj[b].append(e1 + 2)
            adj.append([e1, e1 + 1, e1 + 2])
            vdeg.append(3)
            du = vdeg[u] + 1
            vdeg[u] = du
            bkt = buckets.get(du)
            if bkt is None:
                buckets[du] = [u]
            else:
                bkt.append(u)
            bkt = buckets.get(3)
            if bkt is None:
                buckets[3] = [w]
            else:
                bkt.append(w)
            pick, other = other, e1 + 1
        self.ops += 6 * len(old_maxima)
        return pick, other

    # -- degree bucket queries -------------------------------------------------

    def _bucket_pop_valid(self, deg: int, exclude: Optional[Set[int]] = None) -> int:
        """Pop some vertex currently having degree ``deg``.

        Entries whose vertex degree moved on are discarded; entries merely
        excluded by the caller are stashed and pushed back afterwards.
        """
        bucket = self._buckets.get(deg)
        stash: List[int] = []
        found = -1
        vdeg = self.vdeg
        while bucket:
            self.ops += 1
            v = bucket.pop()
            if vdeg[v] != deg:
                continue  # stale
            if exclude is not None and v in exclude:
                stash.append(v)
                continue
            found = v
            break
        if stash:
            bucket = self._buckets.setdefault(deg, bucket or [])
            bucket.extend(reversed(stash))
            self.ops += len(stash)
        if found < 0:
            raise GraphError(f"no available vertex of degree {deg}")
        return found

    def find_vertex_with_degree(self, x: int) -> int:
        """Some vertex of degree exactly x (read-only)."""
        bucket = self._buckets.get(x)
        vdeg = self.vdeg
        while bucket:
            v = bucket[-1]
            if vdeg[v] == x:
                return v
            bucket.pop()  # stale
        raise GraphError(f"no vertex of degree {x}")

    def attach_vertex(
        self,
        target_degrees: Sequence[int],
        allow_repeat_target: bool = False,
    ) -> Tuple[int, List[int]]:
        """Add one vertex and join it to a vertex of each requested degree.

        Target lookups see the degrees as they evolve: connecting to a
        vertex moves it to the next bucket before the following lookup.
        """
        if not allow_repeat_target and self.mode == "simple":
            pass  # distinctness enforced below in all simple-mode attaches
        w = self.add_vertex()
        chosen: Set[int] = {w}
        new_edges: List[int] = []
        repeat_ok = allow_repeat_target and self.mode == "multi"
        for x in target_degrees:
            target = self._bucket_pop_valid(x, {w} if repeat_ok else chosen)
            chosen.add(target)
            new_edges.append(self.add_edge(target, w))
        return w, new_edges

    # -- validation ------------------------------------------------------------

    def validate(self) -> bool:
        """All store invariants: degrees vs adjacency, mode, labels."""
        deg = [0] * self.n
        seen_pairs: Dict[int, int] = {}
        for e in self.edge_ids():
            u, v = self.eu[e], self.ev[e]
            if u == v:
                return False
            deg[u] += 1
            deg[v] += 1
            key = self._pair_key(u, v)
            seen_pairs[key] = seen_pairs.get(key, 0) + 1
            lab = self.elabel[e]
            if lab is not None and lab < 1:
                return False
        if deg != self.vdeg:
            return False
        if self.mode == "simple" and any(c > 1 for c in seen_pairs.values()):
            return False
        # Every degree must have a valid entry in its bucket heap.
        for v, d in enumerate(self.vdeg):
            heap = self._buckets.get(d, [])
            if not any(self.vdeg[x] == d for x in heap if x == v):
                if v not in heap:
                    return False
        return True

    def certificate_from_flags(self) -> Certificate:
        # Dead edges always carry FLAG_NONE, so flags alone decide.
        eflag = self.eflag
        t1 = {e for e, f in enumerate(eflag) if f & FLAG_T1}
        t2 = {e for e, f in enumerate(eflag) if f & FLAG_T2}
        return Certificate(
            tree1=t1,
            tree2=t2,
            shared=t1 & t2,
            central_cycle=self.central_cycle,
        )

    # -- serialization ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "n": self.n,
            "edges": [
                {
                    "id": e,
                    "u": self.eu[e],
                    "v": self.ev[e],
                    "tree": _FLAG_NAMES[self.eflag[e]],
                    "label": self.elabel[e],
                }
                for e in self.edge_ids()
            ],
            "central_cycle": list(self.central_cycle) if self.central_cycle else None,
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)

    @classmethod
    def from_json_dict(cls, data: dict) -> "LabeledMultigraph":
        try:
            g = cls(data["mode"])
            n = int(data["n"])
            for _ in range(n):
                g.add_vertex()
            for rec in data["edges"]:
                u, v = int(rec["u"]), int(rec["v"])
                if not (0 <= u < n and 0 <= v < n):
                    raise GraphError(f"edge endpoint out of range: {rec}")
                e = g.add_edge(u, v, _FLAG_VALUES[rec["tree"]])
                lab = rec.get("label")
                if lab is not None:
                    lab = int(lab)
                    if lab < 1:
                        raise GraphError(f"label must be positive: {rec}")
                    g.elabel[e] = lab
            cyc = data.get("central_cycle")
            if cyc is not None:
                if len(cyc) != 4:
                    raise GraphError("central_cycle must have 4 vertices")
                g.central_cycle = tuple(int(x) for x in cyc)  # type: ignore[assignment]
            return g
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphError(f"malformed graph document: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "LabeledMultigraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(data)

    def to_dot(self) -> str:
        cyc = set(self.central_cycle or ())
        lines = ["graph G {"]
        for v in range(self.n):
            attrs = ' [shape=doublecircle, style=filled, fillcolor=lightgray]' if v in cyc else ""
            lines.append(f"  {v}{attrs};")
        colors = {FLAG_NONE: "gray", FLAG_T1: "orange", FLAG_T2: "blue", FLAG_BOTH: "purple"}
        for e in self.edge_ids():
            lab = self.elabel[e]
            label = f', label="{lab}"' if lab is not None else ""
            lines.append(
                f"  {self.eu[e]} -- {self.ev[e]} "
                f'[color={colors[self.eflag[e]]}{label}];'
            )
        lines.append("}")
        return "\n".join(lines)


def build_fixed(
    mode: str,
    n: int,
    edges: Iterable[Tuple[int, int, int]],
    central_cycle: Optional[Tuple[int, int, int, int]] = None,
) -> LabeledMultigraph:
    """Construct a graph from an explicit (u, v, flag) edge list."""
    g = LabeledMultigraph(mode)
    for _ in range(n):
        g.add_vertex()
    for u, v, flag in edges:
        g.add_edge(u, v, flag)
    g.central_cycle = central_cycle
    return g
