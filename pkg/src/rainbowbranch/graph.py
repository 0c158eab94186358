"""Directed multigraph with exact integer arc weights and cut queries."""

from __future__ import annotations

from typing import Iterable, Iterator


class GraphError(ValueError):
    """Malformed graph construction input."""


class Digraph:
    """Immutable digraph.  Nodes are 1..n; arcs keep stable ids 1..m in
    input order.

    Parallel arcs are allowed and stay distinct by arc id.  Self-loops are
    rejected at construction: the contraction machinery assumes cycles have
    length >= 2 in the current graph, and loops created *by* contraction are
    handled as dead arcs without ever being materialized.

    Weights are exact integers, so every derived quantity (potentials,
    reduced weights, adjustment steps) stays exact and audits need no
    tolerances.
    """

    __slots__ = ("node_count", "tails", "heads", "weights", "in_arcs")

    def __init__(self, node_count: int, arcs: Iterable[tuple[int, int, int]]):
        if node_count < 1:
            raise GraphError("node count must be >= 1")
        tails = [0]
        heads = [0]
        weights = [0]
        in_arcs: list[list[int]] = [[] for _ in range(node_count + 1)]
        for tail, head, weight in arcs:
            if not (1 <= tail <= node_count) or not (1 <= head <= node_count):
                raise GraphError(
                    f"arc ({tail}, {head}) has an endpoint outside 1..{node_count}")
            if tail == head:
                raise GraphError(f"self-loop at node {tail} is not allowed")
            if not isinstance(weight, int):
                raise GraphError(f"arc ({tail}, {head}) has non-integer weight {weight!r}")
            tails.append(tail)
            heads.append(head)
            weights.append(weight)
            in_arcs[head].append(len(tails) - 1)
        self.node_count = node_count
        self.tails = tuple(tails)
        self.heads = tuple(heads)
        self.weights = tuple(weights)
        self.in_arcs = tuple(tuple(a) for a in in_arcs)

    @property
    def arc_count(self) -> int:
        return len(self.tails) - 1

    def arc(self, arc_id: int) -> tuple[int, int, int]:
        """Return (tail, head, weight) of an arc."""
        if not (1 <= arc_id <= self.arc_count):
            raise GraphError(f"arc id {arc_id} out of range")
        return self.tails[arc_id], self.heads[arc_id], self.weights[arc_id]

    def iter_arcs(self) -> Iterator[tuple[int, int, int, int]]:
        """Yield (arc_id, tail, head, weight) in arc-id order."""
        for a in range(1, self.arc_count + 1):
            yield a, self.tails[a], self.heads[a], self.weights[a]

    def weight_of(self, arc_ids: Iterable[int]) -> int:
        return sum(self.weights[a] for a in arc_ids)

    def _check_nodes(self, nodes: Iterable[int]) -> set[int]:
        xs = set(nodes)
        for v in xs:
            if not (1 <= v <= self.node_count):
                raise GraphError(f"node {v} out of range 1..{self.node_count}")
        return xs

    def gamma(self, nodes: Iterable[int]) -> set[int]:
        """Arc ids with both endpoints in the given node set."""
        xs = self._check_nodes(nodes)
        return {a for a in range(1, self.arc_count + 1)
                if self.tails[a] in xs and self.heads[a] in xs}

    def delta_in(self, nodes: Iterable[int]) -> set[int]:
        """Arc ids entering the given node set from outside."""
        xs = self._check_nodes(nodes)
        return {a for a in range(1, self.arc_count + 1)
                if self.heads[a] in xs and self.tails[a] not in xs}

    def delta_out(self, nodes: Iterable[int]) -> set[int]:
        """Arc ids leaving the given node set."""
        xs = self._check_nodes(nodes)
        return {a for a in range(1, self.arc_count + 1)
                if self.tails[a] in xs and self.heads[a] not in xs}


def build_graph(node_count: int, arcs: Iterable[tuple[int, int, int]]) -> Digraph:
    """Build a Digraph, assigning arc ids 1..m in input order."""
    return Digraph(node_count, arcs)
