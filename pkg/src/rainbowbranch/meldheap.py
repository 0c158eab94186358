"""Mergeable min-priority queue with O(1) bulk key shifting.

Implemented as a leftist tree whose nodes carry a lazy offset pushed to
children on traversal, plus a heap-global shift accumulator.  Every
operation except shift touches O(log size) nodes in the worst case;
shift touches none.  Dual adjustments subtract their step from a whole
queue via shift, and melding rebases the absorbed root so both queues'
accumulated shifts survive the merge.

Deletion by handle and per-item key queries are intentionally absent:
the solvers only ever need extract-min with lazy filtering of stale
entries.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional


class HeapStats:
    """Operation counters, shareable between heaps of one solve."""

    __slots__ = ("inserts", "extractions", "melds", "touches")

    def __init__(self):
        self.inserts = 0
        self.extractions = 0
        self.melds = 0
        self.touches = 0

    def absorb(self, other: "HeapStats") -> None:
        self.inserts += other.inserts
        self.extractions += other.extractions
        self.melds += other.melds
        self.touches += other.touches


class _Node:
    __slots__ = ("key", "add", "item", "left", "right", "npl")

    def __init__(self, key: int, item):
        self.key = key
        self.add = 0
        self.item = item
        self.left = None
        self.right = None
        self.npl = 0


class MeldHeap:
    """Min-heap of (key, item) pairs; keys are exact integers.

    ``check_duplicates`` guards the "no item twice" contract with a
    membership set; solvers that guarantee disjointness by construction
    switch it off to keep melds cheap.
    """

    __slots__ = ("_root", "_size", "_shift", "_items", "_consumed", "stats")

    def __init__(self, stats: Optional[HeapStats] = None, check_duplicates: bool = True):
        self._root: Optional[_Node] = None
        self._size = 0
        self._shift = 0
        self._items: Optional[set] = set() if check_duplicates else None
        self._consumed = False
        self.stats = stats if stats is not None else HeapStats()

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, object]],
                   stats: Optional[HeapStats] = None,
                   check_duplicates: bool = True) -> "MeldHeap":
        """Bulk-build from (key, item) pairs in O(len) total."""
        heap = cls(stats=stats, check_duplicates=check_duplicates)
        nodes = deque()
        for key, item in pairs:
            if heap._items is not None:
                if item in heap._items:
                    raise ValueError(f"item {item!r} inserted twice")
                heap._items.add(item)
            nodes.append(_Node(key, item))
            heap._size += 1
            heap.stats.inserts += 1
        while len(nodes) > 1:
            nodes.append(heap._merge(nodes.popleft(), nodes.popleft()))
        if nodes:
            heap._root = nodes[0]
        return heap

    def __len__(self) -> int:
        return self._size

    def __bool__(self) -> bool:
        return self._size > 0

    def _guard(self) -> None:
        if self._consumed:
            raise RuntimeError("heap was consumed by a meld")

    def _merge(self, a: Optional[_Node], b: Optional[_Node]) -> Optional[_Node]:
        if a is None:
            return b
        if b is None:
            return a
        path = []
        touches = 0
        while True:
            if b.key < a.key:
                a, b = b, a
            path.append(a)
            # Push the pending offset down before descending past a.
            add = a.add
            if add:
                l = a.left
                if l is not None:
                    l.key += add
                    l.add += add
                r = a.right
                if r is not None:
                    r.key += add
                    r.add += add
                a.add = 0
            nxt = a.right
            touches += 1
            if nxt is None:
                break
            a = nxt
        rest = b
        for node in reversed(path):
            l = node.left
            if l is None:
                node.left = rest
                node.right = None
                node.npl = 0
            else:
                if l.npl < rest.npl:
                    node.left = rest
                    node.right = l
                else:
                    node.right = rest
                node.npl = node.right.npl + 1
            rest = node
        self.stats.touches += touches
        return rest

    def insert(self, item, key: int) -> None:
        """Add an item with the given effective key."""
        self._guard()
        if self._items is not None:
            if item in self._items:
                raise ValueError(f"item {item!r} is already in the heap")
            self._items.add(item)
        node = _Node(key - self._shift, item)
        self._root = self._merge(self._root, node)
        self._size += 1
        self.stats.inserts += 1

    @property
    def min_item(self) -> Optional[tuple[int, object]]:
        """(effective key, item) of a minimum entry, or None if empty."""
        self._guard()
        root = self._root
        if root is None:
            return None
        return root.key + self._shift, root.item

    def extract_min(self) -> Optional[tuple[int, object]]:
        """Remove and return (effective key, item) of a minimum entry."""
        self._guard()
        root = self._root
        if root is None:
            return None
        add = root.add
        if add:
            l = root.left
            if l is not None:
                l.key += add
                l.add += add
            r = root.right
            if r is not None:
                r.key += add
                r.add += add
            root.add = 0
        self._root = self._merge(root.left, root.right)
        self._size -= 1
        self.stats.extractions += 1
        self.stats.touches += 1
        if self._items is not None:
            self._items.discard(root.item)
        return root.key + self._shift, root.item

    def shift(self, delta: int) -> None:
        """Change every effective key currently in the heap by delta. O(1)."""
        self._guard()
        self._shift += delta

    def meld(self, other: "MeldHeap") -> "MeldHeap":
        """Absorb ``other`` and return the union heap.

        ``other`` is consumed; each item keeps its pre-meld effective key.
        """
        self._guard()
        other._guard()
        if other is self:
            raise ValueError("cannot meld a heap with itself")
        if self._items is not None and other._items is not None:
            overlap = self._items & other._items
            if overlap:
                raise ValueError(f"heaps share items: {sorted(overlap)[:5]}")
            if len(other._items) > len(self._items):
                other._items.update(self._items)
                self._items = other._items
            else:
                self._items.update(other._items)
        root = other._root
        if root is not None:
            d = other._shift - self._shift
            if d:
                root.key += d
                root.add += d
            self._root = self._merge(self._root, root)
            self._size += other._size
        if other.stats is not self.stats:
            self.stats.absorb(other.stats)
        self.stats.melds += 1
        other._root = None
        other._size = 0
        other._items = None
        other._consumed = True
        return self
