"""Node colorings and the rainbow independence test.

A set of nodes is independent iff no two of them currently share a color
class.  Contracting a cycle unites the color classes of its nodes, which
is exactly how the rainbow matroid quotients: classes only ever coarsen.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .dsu import DsuForest


class DependentSetError(ValueError):
    """A node set expected to be rainbow-independent was not.

    Cycles detected by the solvers are independent by construction, so
    hitting this signals an algorithm bug upstream.
    """


class Coloring:
    """Color classes over nodes 1..n with merge support.

    ``color_of`` maps nodes to their *original* colors 1..k and never
    changes; the current (merged) class of a node is the DSU root of its
    color.  Per-class node lists are optional: only the dense engine needs
    to enumerate members, the sparse engine answers everything with root
    queries.
    """

    def __init__(self, color_of: Sequence[int], k: int,
                 naive_dsu: bool = False, track_members: bool = True):
        color_of = tuple(color_of)
        if len(color_of) < 1 or color_of[0] != 0:
            raise ValueError("color_of must be 1-indexed with a 0 sentinel at index 0")
        if k < 0:
            raise ValueError("color count must be >= 0")
        for v, c in enumerate(color_of[1:], start=1):
            if not (1 <= c <= k):
                raise ValueError(f"node {v} has color {c} outside 1..{k}")
        self.color_of = color_of
        self.k = k
        self._dsu = DsuForest(k, naive=naive_dsu)
        self._colors: dict[int, list[int]] = {c: [c] for c in range(1, k + 1)}
        self._members: dict[int, list[int]] | None = None
        if track_members:
            members: dict[int, list[int]] = {c: [] for c in range(1, k + 1)}
            for v, c in enumerate(color_of[1:], start=1):
                members[c].append(v)
            self._members = members

    @property
    def node_count(self) -> int:
        return len(self.color_of) - 1

    @property
    def union_count(self) -> int:
        return self._dsu.union_count

    def class_of(self, node: int) -> int:
        """Current class (color root) of a node."""
        return self._dsu.find(self.color_of[node])

    def class_of_color(self, color: int) -> int:
        return self._dsu.find(color)

    def is_independent(self, nodes: Iterable[int]) -> bool:
        """True iff no two of the nodes share a current color class."""
        seen = set()
        for v in nodes:
            r = self._dsu.find(self.color_of[v])
            if r in seen:
                return False
            seen.add(r)
        return True

    def merge_classes(self, nodes: Iterable[int]) -> int:
        """Unite the classes of the given independent node set; return the
        merged class root.

        Rejects dependent input: contracted cycles are always independent,
        so a dependent set here is an upstream bug, not a data error.
        """
        nodes = list(nodes)
        if not nodes:
            raise ValueError("cannot merge classes of an empty node set")
        roots = []
        seen = set()
        for v in nodes:
            r = self._dsu.find(self.color_of[v])
            if r in seen:
                raise DependentSetError(f"nodes {nodes} are not rainbow-independent")
            seen.add(r)
            roots.append(r)
        first = roots[0]
        for r in roots[1:]:
            self._dsu.union(first, r)
        new_root = self._dsu.find(first)
        self._fold(self._colors, roots, new_root)
        if self._members is not None:
            self._fold(self._members, roots, new_root)
        return new_root

    @staticmethod
    def _fold(table: dict[int, list[int]], roots: list[int], new_root: int) -> None:
        # Keep the largest constituent list and extend it with the rest.
        biggest = max(roots, key=lambda r: len(table[r]))
        merged = table[biggest]
        for r in roots:
            if r != biggest:
                merged.extend(table.pop(r))
        if biggest != new_root:
            table[new_root] = table.pop(biggest)

    def class_colors(self, class_root: int) -> list[int]:
        """Original colors united into the given class."""
        return list(self._colors[class_root])

    def class_members(self, class_root: int) -> list[int]:
        """Nodes currently in the given class (requires track_members)."""
        if self._members is None:
            raise ValueError("member tracking is disabled for this coloring")
        return list(self._members[class_root])

    def class_roots(self) -> list[int]:
        """Roots of all current classes, ascending."""
        return sorted(self._colors)
