"""Shared solver machinery: virtual contracted graph, cycle detection,
contraction records, and the restoration phase.

The current graph is never materialized.  A node-level DSU maps original
nodes to current nodes (composites are the roots of merged sets), a second
DSU tracks weak connectivity of the current branching, and the coloring's
own DSU tracks merged color classes.  An original arc is dead iff both its
endpoints map to the same current node; alive arcs correspond one-to-one
to current-graph arcs.

Restoration needs to answer two containment questions per unwound record:
which cycle node an entering arc's head belongs to, and which cycle node's
pre-merge class a covering arc pins.  Both are served by forests built
during contraction (one over nodes, one over color classes) with DFS
intervals computed once at restore time.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Optional

from .coloring import Coloring
from .dsu import DsuForest
from .graph import Digraph


@dataclass
class SolveCounters:
    """Structure-operation counts surfaced for bounds checks and benchmarks."""

    heap_inserts: int = 0
    heap_extractions: int = 0
    heap_melds: int = 0
    dsu_unions: int = 0
    contractions: int = 0
    dual_steps: int = 0
    dense_touches: int = 0

    def as_dict(self) -> dict[str, int]:
        return {
            "extractions": self.heap_extractions,
            "melds": self.heap_melds,
            "unions": self.dsu_unions,
            "contractions": self.contractions,
            "dual_steps": self.dual_steps,
        }


@dataclass(frozen=True)
class CycleFound:
    """A directed cycle detected in B + {closing arc}.

    ``arcs`` are original arc ids in forward cycle order, ``heads`` the
    matching current-graph head nodes; slot 0 is the closing arc, whose
    head was the uncovered tree root the walk ended at.
    """

    heads: tuple[int, ...]
    arcs: tuple[int, ...]


@dataclass(frozen=True)
class ContractionRecord:
    """One contracted cycle with enough bookkeeping to restore it."""

    arcs: tuple[int, ...]          # cycle arcs, forward order, [0] = closing arc
    heads: tuple[int, ...]         # then-current head node per arc (aligned)
    ct_children: tuple[int, ...]   # node-forest children swallowed (aligned)
    cm_children: tuple[int, ...]   # class-forest children merged (aligned)
    ct_id: int                     # composite's node-forest id
    cm_id: int                     # merged class's class-forest id
    composite_root: int            # node-DSU root after the union
    class_root: int                # color-DSU root after the merge


class SolverState:
    """Mutable state of one solve over a fixed graph and coloring.

    Takes ownership of ``coloring`` (its classes get merged in place).
    ``trace``, when given, receives one line per structural event.
    """

    def __init__(self, graph: Digraph, coloring: Coloring,
                 naive_dsu: bool = False, trace: Optional[list[str]] = None):
        n = graph.node_count
        if coloring.node_count != n:
            raise ValueError("coloring does not match the graph's node count")
        self.graph = graph
        self.coloring = coloring
        self.d_contr = DsuForest(n, naive=naive_dsu)
        self.d_tree = DsuForest(n, naive=naive_dsu)
        # Incoming branching arc per current root; 0 = uncovered.
        self.in_arc = [0] * (n + 1)
        self.records: list[ContractionRecord] = []
        self.counters = SolveCounters()
        self.trace = trace
        # Node forest: leaves 1..n, one internal node per record.
        self.ct_parent = [0] * (n + 1)
        self.ct_of_root = list(range(n + 1))
        # Class forest: leaves 1..k, one internal node per record.
        k = coloring.k
        self.cm_parent = [0] * (k + 1)
        self.cm_of_root = list(range(k + 1))

    # -- current graph queries -------------------------------------------

    def current_root(self, node: int) -> int:
        return self.d_contr.find(node)

    def is_alive(self, arc: int) -> bool:
        g = self.graph
        return self.d_contr.find(g.tails[arc]) != self.d_contr.find(g.heads[arc])

    def is_covered(self, current: int) -> bool:
        return self.in_arc[current] != 0

    def class_of_current(self, current: int) -> int:
        # Any original member's color maps to the composite's class, so the
        # root itself (an original node id) is a valid witness.
        return self.coloring.class_of(current)

    # -- contraction phase -----------------------------------------------

    def try_add_arc(self, arc: int) -> Optional[CycleFound]:
        """Try to extend the branching with an alive arc whose current head
        is uncovered.

        Returns None when the branching gained the arc, or the unique cycle
        in B + {arc} (state unchanged) when tail and head already share a
        tree of the current branching.
        """
        g = self.graph
        tail = g.tails[arc]
        head = g.heads[arc]
        tu = self.d_contr.find(tail)
        th = self.d_contr.find(head)
        if tu == th:
            raise ValueError(f"arc {arc} is dead in the current graph")
        if self.in_arc[th]:
            raise ValueError(f"current node {th} is already covered")
        if self.d_tree.find(tail) != self.d_tree.find(head):
            self.d_tree.union(tail, head)
            self.in_arc[th] = arc
            if self.trace is not None:
                self.trace.append(f"add-arc {arc} head={th}")
            return None
        # Same tree: th is that tree's root (it is uncovered), so the parent
        # walk from tu must reach it.
        in_arc = self.in_arc
        d_find = self.d_contr.find
        tails = g.tails
        walk_arcs: list[int] = []
        walk_nodes: list[int] = [tu]
        cur = tu
        while cur != th:
            e = in_arc[cur]
            assert e, "parent walk fell off the tree before reaching the root"
            walk_arcs.append(e)
            cur = d_find(tails[e])
            walk_nodes.append(cur)
        arcs = (arc, *reversed(walk_arcs))
        heads = (th, *reversed(walk_nodes[:-1]))
        return CycleFound(heads=heads, arcs=arcs)

    def contract(self, cycle: CycleFound) -> ContractionRecord:
        """Contract a detected cycle: unite its nodes, merge its color
        classes, and drop the branching arcs inside it."""
        heads = cycle.heads
        ct_children = tuple(self.ct_of_root[h] for h in heads)
        cm_children = tuple(self.cm_of_root[self.class_of_current(h)] for h in heads)
        class_root = self.coloring.merge_classes(heads)
        first = heads[0]
        d_contr = self.d_contr
        d_tree = self.d_tree
        for h in heads[1:]:
            assert d_tree.find(first) == d_tree.find(h), \
                "cycle nodes must already share a branching tree"
            d_contr.union(first, h)
        composite = d_contr.find(first)
        for h in heads:
            self.in_arc[h] = 0
        rec_idx = len(self.records)
        ct_id = len(self.ct_parent)
        for c in ct_children:
            self.ct_parent[c] = ct_id
        self.ct_parent.append(0)
        self.ct_of_root[composite] = ct_id
        cm_id = len(self.cm_parent)
        for c in cm_children:
            self.cm_parent[c] = cm_id
        self.cm_parent.append(0)
        self.cm_of_root[class_root] = cm_id
        record = ContractionRecord(
            arcs=cycle.arcs, heads=heads,
            ct_children=ct_children, cm_children=cm_children,
            ct_id=ct_id, cm_id=cm_id,
            composite_root=composite, class_root=class_root)
        self.records.append(record)
        self.counters.contractions += 1
        if self.trace is not None:
            self.trace.append(
                f"contract rec={rec_idx} arcs={list(cycle.arcs)} composite={composite}")
        return record

    def final_branching(self) -> list[int]:
        """Branching arcs of the final current graph."""
        return [a for a in self.in_arc if a]

    def total_unions(self) -> int:
        return (self.d_contr.union_count + self.d_tree.union_count
                + self.coloring.union_count)

    # -- restoration phase -----------------------------------------------

    def restore(self, final_arcs: Iterable[int]) -> list[int]:
        """Unwind the contraction log under a branching of the final graph;
        return the corresponding branching of the original graph.

        Per record, an arc entering the composite pins the cycle arc to
        drop (the one sharing its head node).  With no such arc, an arc
        covering the merged class from outside the composite pins the drop
        at class level instead; only a fully uncovered class leaves the
        choice free, and then the closing arc is dropped for determinism.
        """
        g = self.graph
        final_arcs = list(final_arcs)
        enter: dict[int, int] = {}
        cover: dict[int, int] = {}
        for a in final_arcs:
            h = g.heads[a]
            t = self.ct_of_root[self.d_contr.find(h)]
            if t in enter:
                raise AssertionError("two final arcs enter one current node")
            enter[t] = a
            c = self.cm_of_root[self.coloring.class_of(h)]
            if c in cover:
                raise AssertionError("two final arcs cover one class")
            cover[c] = a
        if self.records:
            n = g.node_count
            k = self.coloring.k
            ct_tin, ct_tout = _dfs_intervals(
                self.ct_parent, n, [r.ct_children for r in self.records])
            cm_tin, cm_tout = _dfs_intervals(
                self.cm_parent, k, [r.cm_children for r in self.records])
            for rec_idx in range(len(self.records) - 1, -1, -1):
                rec = self.records[rec_idx]
                b = enter.pop(rec.ct_id, None)
                bc = cover.pop(rec.cm_id, None)
                if b is not None:
                    assert bc is b, "composite covered but class pinned elsewhere"
                    j = _locate(rec.ct_children, ct_tin, ct_tout, ct_tin[g.heads[b]])
                    case = "head"
                elif bc is not None:
                    leaf_color = self.coloring.color_of[g.heads[bc]]
                    j = _locate(rec.cm_children, cm_tin, cm_tout, cm_tin[leaf_color])
                    case = "class"
                else:
                    j = 0
                    case = "free"
                arcs = rec.arcs
                ctc = rec.ct_children
                cmc = rec.cm_children
                for l in range(len(arcs)):
                    if l == j:
                        continue
                    enter[ctc[l]] = arcs[l]
                    cover[cmc[l]] = arcs[l]
                if b is not None:
                    enter[ctc[j]] = b
                    cover[cmc[j]] = b
                elif bc is not None:
                    cover[cmc[j]] = bc
                if self.trace is not None:
                    self.trace.append(
                        f"restore-choice rec={rec_idx} case={case} drop={arcs[j]}")
        n = g.node_count
        result = sorted(enter.values())
        for node in enter:
            assert node <= n, "restoration left an arc on an unexpanded composite"
        expected = len(final_arcs) + sum(len(r.arcs) - 1 for r in self.records)
        assert len(result) == expected, "restored cardinality mismatch"
        return result


def _dfs_intervals(parents: list[int], leaf_count: int,
                   rec_children: list[tuple[int, ...]]) -> tuple[list[int], list[int]]:
    """Entry/exit stamps for every forest node; descendants nest inside."""
    size = len(parents)
    tin = [0] * size
    tout = [0] * size
    t = 0
    for root in range(1, size):
        if parents[root]:
            continue
        stack = [(root, False)]
        while stack:
            node, done = stack.pop()
            if done:
                tout[node] = t
                continue
            t += 1
            tin[node] = t
            stack.append((node, True))
            if node > leaf_count:
                for c in reversed(rec_children[node - leaf_count - 1]):
                    stack.append((c, False))
    return tin, tout


def _locate(children: tuple[int, ...], tin: list[int], tout: list[int],
            leaf_tin: int) -> int:
    """Slot index of the child whose subtree contains the given leaf stamp."""
    order = sorted(range(len(children)), key=lambda i: tin[children[i]])
    tins = [tin[children[i]] for i in order]
    pos = bisect_right(tins, leaf_tin) - 1
    assert pos >= 0, "leaf is not under any child"
    slot = order[pos]
    assert tin[children[slot]] <= leaf_tin <= tout[children[slot]], \
        "leaf is not under the located child"
    return slot


def is_matroid_branching(graph: Digraph, color_of, arcs: Iterable[int]) -> bool:
    """Check the three defining properties: in-degree <= 1, no undirected
    cycle, and rainbow-independent covered set."""
    arcs = list(arcs)
    seen_heads: set[int] = set()
    seen_colors: set[int] = set()
    forest = DsuForest(graph.node_count)
    for a in arcs:
        h = graph.heads[a]
        if h in seen_heads:
            return False
        seen_heads.add(h)
        c = color_of[h]
        if c in seen_colors:
            return False
        seen_colors.add(c)
        if not forest.union(graph.tails[a], h):
            return False
    return True


def check_branching(graph: Digraph, color_of, arcs: Iterable[int]) -> None:
    """Raise if the arc set is not a matroid branching of the graph."""
    if not is_matroid_branching(graph, color_of, arcs):
        raise AssertionError("solver produced an invalid matroid branching")
