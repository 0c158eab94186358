"""Disjoint-set forests in the two flavors the solvers need.

The rank-only variant unions by rank and deliberately applies *no* path
compression, so a find costs O(log n) and tree depth stays bounded by
log2(size).  The naive variant keeps a direct root label per element and
relabels one side on union, giving O(1) finds at O(n) union cost; the
dense matrix engine wants exactly that trade.
"""

from __future__ import annotations


class DsuForest:
    """Union-find over elements 1..size."""

    __slots__ = ("size", "naive", "union_count", "parent", "rank", "label", "members")

    def __init__(self, size: int, naive: bool = False):
        if size < 0:
            raise ValueError("size must be >= 0")
        self.size = size
        self.naive = naive
        self.union_count = 0
        if naive:
            self.parent = None
            self.rank = None
            self.label = list(range(size + 1))
            self.members = [[x] for x in range(size + 1)]
        else:
            self.parent = list(range(size + 1))
            self.rank = [0] * (size + 1)
            self.label = None
            self.members = None

    def _check(self, x: int) -> None:
        if not (1 <= x <= self.size):
            raise IndexError(f"element {x} out of range 1..{self.size}")

    def find(self, x: int) -> int:
        self._check(x)
        if self.naive:
            return self.label[x]
        parent = self.parent
        while parent[x] != x:
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        """Unite the sets of x and y; return False if already united."""
        rx = self.find(x)
        ry = self.find(y)
        if rx == ry:
            return False
        if self.naive:
            # Relabel the smaller side so the bigger member list survives.
            if len(self.members[rx]) < len(self.members[ry]):
                rx, ry = ry, rx
            label = self.label
            for e in self.members[ry]:
                label[e] = rx
            self.members[rx].extend(self.members[ry])
            self.members[ry] = []
        else:
            if self.rank[rx] < self.rank[ry]:
                rx, ry = ry, rx
            self.parent[ry] = rx
            if self.rank[rx] == self.rank[ry]:
                self.rank[rx] += 1
        self.union_count += 1
        return True

    def set_members(self, x: int) -> list[int]:
        """Members of x's set (naive variant only)."""
        if not self.naive:
            raise ValueError("member lists are kept by the naive variant only")
        self._check(x)
        return list(self.members[self.label[x]])

    def depth_of(self, x: int) -> int:
        """Length of the parent chain from x to its root (rank variant)."""
        if self.naive:
            return 0
        self._check(x)
        d = 0
        while self.parent[x] != x:
            x = self.parent[x]
            d += 1
        return d


def make_sets(size: int, naive: bool = False) -> DsuForest:
    """size singleton sets over elements 1..size."""
    return DsuForest(size, naive=naive)
