"""Degree sequences stored as (value, count) buckets for cheap laying off.

A sequence is kept sorted non-increasingly at all times.  The canonical
storage is a doubly-linked list of buckets ``(value, count)`` with strictly
decreasing values, which makes laying off an entry of value ``d`` an
``O(d)`` operation instead of a re-sort.
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator, List, Tuple

__all__ = [
    "DegreeSequence",
    "debug_asserts_enabled",
    "set_debug_asserts",
    "normalize",
    "is_graphical",
    "is_multigraphical",
    "lay_off_graphical",
    "lay_off_multigraphical",
    "parse_sequence",
]


_DEBUG_ASSERTS: bool | None = None


def debug_asserts_enabled() -> bool:
    """Whether expensive internal consistency assertions are switched on.

    Controlled by the TCREAL_DEBUG_ASSERT environment variable (read
    once, then cached; tests can override with set_debug_asserts).
    """
    global _DEBUG_ASSERTS
    if _DEBUG_ASSERTS is None:
        _DEBUG_ASSERTS = os.environ.get("TCREAL_DEBUG_ASSERT") == "1"
    return _DEBUG_ASSERTS


def set_debug_asserts(value: bool | None) -> None:
    """Force (or with None, re-read) the debug-assertion switch."""
    global _DEBUG_ASSERTS
    _DEBUG_ASSERTS = value


class _Bucket:
    __slots__ = ("value", "count", "prev", "next")

    def __init__(self, value: int, count: int):
        self.value = value
        self.count = count
        self.prev: _Bucket | None = None
        self.next: _Bucket | None = None


class DegreeSequence:
    """A non-increasing sequence of non-negative integer degrees.

    ``entries`` is materialized on demand; the buckets are authoritative.
    Laying off mutates the sequence in place and returns it, so chained
    reductions never pay for copies.
    """

    __slots__ = ("head", "tail", "n", "total")

    def __init__(self, values: Iterable[int] = ()):
        self.head: _Bucket | None = None
        self.tail: _Bucket | None = None
        self.n = 0
        self.total = 0
        vals = sorted(values, reverse=True)
        for v in vals:
            if v < 0:
                raise ValueError("degrees must be non-negative")
            self._append_entry(v)

    # -- construction helpers -------------------------------------------------

    def _append_entry(self, v: int) -> None:
        """Append one entry of value ``v``; requires v <= current minimum."""
        if self.tail is not None and self.tail.value < v:
            raise ValueError("entries must be appended in non-increasing order")
        if self.tail is not None and self.tail.value == v:
            self.tail.count += 1
        else:
            node = _Bucket(v, 1)
            node.prev = self.tail
            if self.tail is None:
                self.head = node
            else:
                self.tail.next = node
            self.tail = node
        self.n += 1
        self.total += v

    def _unlink(self, node: _Bucket) -> None:
        if node.prev is None:
            self.head = node.next
        else:
            node.prev.next = node.next
        if node.next is None:
            self.tail = node.prev
        else:
            node.next.prev = node.prev

    def _insert_after(self, node: _Bucket | None, value: int, count: int) -> _Bucket:
        new = _Bucket(value, count)
        if node is None:  # insert at head
            new.next = self.head
            if self.head is not None:
                self.head.prev = new
            self.head = new
            if self.tail is None:
                self.tail = new
        else:
            new.next = node.next
            new.prev = node
            if node.next is not None:
                node.next.prev = new
            else:
                self.tail = new
            node.next = new
        return new

    # -- read access ----------------------------------------------------------

    def iter_buckets(self) -> Iterator[Tuple[int, int]]:
        node = self.head
        while node is not None:
            yield node.value, node.count
            node = node.next

    @property
    def entries(self) -> List[int]:
        out: List[int] = []
        for v, c in self.iter_buckets():
            out.extend([v] * c)
        return out

    @property
    def max_degree(self) -> int:
        if self.head is None:
            raise IndexError("empty sequence has no maximum degree")
        return self.head.value

    @property
    def min_degree(self) -> int:
        if self.tail is None:
            raise IndexError("empty sequence has no minimum degree")
        return self.tail.value

    def degree_at(self, i: int) -> int:
        """The i-th largest entry, 1-based."""
        if not 1 <= i <= self.n:
            raise IndexError(f"index {i} out of range for sequence of length {self.n}")
        seen = 0
        node = self.head
        while node is not None:
            seen += node.count
            if seen >= i:
                return node.value
            node = node.next
        raise AssertionError("bucket counts inconsistent with n")

    def degree_at_from_end(self, i: int) -> int:
        """The i-th smallest entry, 1-based (i=1 gives the minimum)."""
        if not 1 <= i <= self.n:
            raise IndexError(f"index {i} out of range for sequence of length {self.n}")
        seen = 0
        node = self.tail
        while node is not None:
            seen += node.count
            if seen >= i:
                return node.value
            node = node.prev
        raise AssertionError("bucket counts inconsistent with n")

    def count_of(self, value: int) -> int:
        for v, c in self.iter_buckets():
            if v == value:
                return c
            if v < value:
                break
        return 0

    def copy(self) -> "DegreeSequence":
        dup = DegreeSequence()
        for v, c in self.iter_buckets():
            dup._splice_tail(v, c)
        return dup

    def _splice_tail(self, value: int, count: int) -> None:
        node = _Bucket(value, count)
        node.prev = self.tail
        if self.tail is None:
            self.head = node
        else:
            self.tail.next = node
        self.tail = node
        self.n += count
        self.total += value * count

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DegreeSequence):
            return NotImplemented
        return list(self.iter_buckets()) == list(other.iter_buckets())

    def __hash__(self) -> int:
        return hash(tuple(self.iter_buckets()))

    def __repr__(self) -> str:
        return f"DegreeSequence({self.entries})"

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.entries)

    # -- mutation -------------------------------------------------------------

    def remove_entry_of_value(self, value: int) -> None:
        """Remove one entry of exactly ``value``."""
        node = self.head
        while node is not None and node.value > value:
            node = node.next
        if node is None or node.value != value:
            raise ValueError(f"no entry of value {value}")
        node.count -= 1
        if node.count == 0:
            self._unlink(node)
        self.n -= 1
        self.total -= value

    def remove_min_entry(self) -> int:
        """Remove one entry of the minimum value in O(1); returns it."""
        node = self.tail
        if node is None:
            raise ValueError("cannot remove from an empty sequence")
        value = node.value
        node.count -= 1
        if node.count == 0:
            self._unlink(node)
        self.n -= 1
        self.total -= value
        return value

    def add_entry(self, value: int) -> None:
        """Insert one entry, keeping the sort order."""
        if value < 0:
            raise ValueError("degrees must be non-negative")
        prev: _Bucket | None = None
        node = self.head
        while node is not None and node.value > value:
            prev = node
            node = node.next
        if node is not None and node.value == value:
            node.count += 1
        else:
            self._insert_after(prev, value, 1)
        self.n += 1
        self.total += value

    def decrement_top(self, k: int) -> None:
        """Decrement the k largest entries by one each, keeping sort order.

        O(k) bucket work: only buckets overlapping the top-k prefix change.
        """
        if k == 0:
            return
        if k > self.n:
            raise ValueError(f"cannot decrement top {k} of {self.n} entries")
        # Collect the affected prefix as (value, count, take) triples.
        affected: List[Tuple[int, int, int]] = []
        node = self.head
        rem = k
        while rem > 0:
            assert node is not None
            take = min(node.count, rem)
            affected.append((node.value, node.count, take))
            rem -= take
            node = node.next
        boundary = node  # first untouched bucket (may be None)
        if affected[-1][0] == 0:
            raise ValueError("cannot decrement a zero entry")
        # Rebuild the prefix: each bucket (v, c, t) becomes (v, c-t), (v-1, t).
        pairs: List[List[int]] = []
        for v, c, t in affected:
            for val, cnt in ((v, c - t), (v - 1, t)):
                if cnt == 0:
                    continue
                if pairs and pairs[-1][0] == val:
                    pairs[-1][1] += cnt
                else:
                    pairs.append([val, cnt])
        if boundary is not None and pairs and pairs[-1][0] == boundary.value:
            boundary.count += pairs.pop()[1]
        # Splice the rebuilt prefix in front of the boundary.
        prev: _Bucket | None = None
        new_head: _Bucket | None = None
        for val, cnt in pairs:
            b = _Bucket(val, cnt)
            b.prev = prev
            if prev is None:
                new_head = b
            else:
                prev.next = b
            prev = b
        if prev is None:
            new_head = boundary
            if boundary is not None:
                boundary.prev = None
        else:
            prev.next = boundary
            if boundary is not None:
                boundary.prev = prev
        self.head = new_head
        if boundary is None:
            self.tail = prev
        self.total -= k

    def decrement_one_of_value(self, value: int) -> None:
        """Decrement a single entry of exactly ``value`` by one."""
        if value <= 0:
            raise ValueError("cannot decrement an entry of value <= 0")
        node = self.head
        while node is not None and node.value > value:
            node = node.next
        if node is None or node.value != value:
            raise ValueError(f"no entry of value {value}")
        node.count -= 1
        target = node.next
        if target is not None and target.value == value - 1:
            target.count += 1
        else:
            self._insert_after(node, value - 1, 1)
        if node.count == 0:
            self._unlink(node)
        self.total -= 1

    def split_max_and_drop_min(self) -> int:
        """Decrement one copy of the maximum, then remove one minimum entry.

        Fused equivalent of ``decrement_one_of_value(max_degree)`` followed
        by ``remove_min_entry()``; returns the old maximum.
        """
        head = self.head
        if head is None:
            raise ValueError("cannot mutate an empty sequence")
        value = head.value
        if value <= 0:
            raise ValueError("cannot decrement an entry of value <= 0")
        head.count -= 1
        nxt = head.next
        if nxt is not None and nxt.value == value - 1:
            nxt.count += 1
        else:
            self._insert_after(head, value - 1, 1)
        if head.count == 0:
            self._unlink(head)
        tail = self.tail
        assert tail is not None
        tail_value = tail.value
        tail.count -= 1
        if tail.count == 0:
            self._unlink(tail)
        self.n -= 1
        self.total -= 1 + tail_value
        return value

    def _check_consistency(self) -> None:
        vals = []
        node = self.head
        prev = None
        total = 0
        count = 0
        while node is not None:
            assert node.count >= 1
            if prev is not None:
                assert prev.value > node.value
            assert node.prev is prev
            total += node.value * node.count
            count += node.count
            vals.append(node.value)
            prev = node
            node = node.next
        assert self.tail is prev
        assert total == self.total, (total, self.total)
        assert count == self.n


def normalize(values: Iterable[int]) -> DegreeSequence:
    """Sort arbitrary degree values into a consistent sequence."""
    return DegreeSequence(values)


def is_graphical(d: DegreeSequence) -> bool:
    """Erdős–Gallai test: even sum plus the prefix inequalities.

    Runs over the (value, count) buckets in O(number of distinct values):
    the prefix inequality only needs checking where the value changes
    (everywhere else it is implied by its neighbors), and only up to the
    largest r with d_r >= r (beyond that it holds automatically).
    """
    if d.n == 0:
        return True
    if d.total % 2 == 1:
        return False
    groups = list(d.iter_buckets())
    if groups[0][0] >= d.n:
        return False
    k = len(groups)
    # Suffix counts / sums over whole buckets, for the min(r, d_i) tail.
    suf_cnt = [0] * (k + 1)
    suf_sum = [0] * (k + 1)
    for j in range(k - 1, -1, -1):
        v, c = groups[j]
        suf_cnt[j] = suf_cnt[j + 1] + c
        suf_sum[j] = suf_sum[j + 1] + v * c
    split = k  # first bucket index whose value is < rc (values descend)
    prefix = 0
    r = 0
    for gi, (v, c) in enumerate(groups):
        if v <= r:
            break  # past the largest r with d_r >= r
        rc = r + c if v >= r + c else v  # checkpoint: bucket end, clipped
        prefix_rc = prefix + (rc - r) * v
        while split > gi + 1 and groups[split - 1][0] < rc:
            split -= 1
        # Entries after position rc: the rest of this bucket contributes
        # min(v, rc) each; later buckets split at value >= rc vs below.
        tail = (r + c - rc) * (v if v < rc else rc)
        tail += rc * (suf_cnt[gi + 1] - suf_cnt[split]) + suf_sum[split]
        if prefix_rc > rc * (rc - 1) + tail:
            return False
        if rc < r + c:
            break
        prefix = prefix_rc
        r = rc
    return True


def is_multigraphical(d: DegreeSequence) -> bool:
    """Even sum and the maximum degree at most the sum of the rest."""
    if d.n == 0:
        return True
    if d.total % 2 == 1:
        return False
    return d.max_degree <= d.total - d.max_degree


def lay_off_graphical(d: DegreeSequence, i: int) -> DegreeSequence:
    """Remove the i-th entry and decrement the largest d_i remaining entries.

    Mutates ``d`` in place and returns it; O(d_i) bucket work.
    """
    if not 1 <= i <= d.n:
        raise IndexError(f"index {i} out of range for sequence of length {d.n}")
    value = d.degree_at(i)
    if value >= d.n:
        raise ValueError(f"entry {value} cannot connect to {value} distinct other vertices")
    d.remove_entry_of_value(value)
    d.decrement_top(value)
    if debug_asserts_enabled():
        d._check_consistency()
    return d


def lay_off_multigraphical(d: DegreeSequence, j: int) -> DegreeSequence:
    """Remove a single edge between the largest entry and the j-th entry.

    Mutates ``d`` in place and returns it; O(1) bucket work for j near
    either end of the sequence.
    """
    if not 2 <= j <= d.n:
        raise IndexError(f"index {j} out of range (need 2 <= j <= {d.n})")
    vj = d.degree_at(j)
    if vj == 0:
        raise ValueError("entry to lay off has value 0")
    d.decrement_one_of_value(d.max_degree)
    # After decrementing d_1, an entry of value vj still exists (j >= 2).
    d.decrement_one_of_value(vj)
    if debug_asserts_enabled():
        d._check_consistency()
    return d


def parse_sequence(text: str) -> DegreeSequence:
    """Parse whitespace- or comma-separated decimal degrees."""
    tokens = text.replace(",", " ").split()
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"malformed degree sequence: {text!r}") from exc
    if any(v < 0 for v in values):
        raise ValueError(f"negative degree in sequence: {text!r}")
    return DegreeSequence(values)
