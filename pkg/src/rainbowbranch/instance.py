"""Problem instance: a weighted digraph plus a node coloring."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coloring import Coloring
from .graph import Digraph, build_graph


@dataclass(frozen=True)
class Instance:
    """One problem input.  ``colors`` is 1-indexed (slot 0 unused)."""

    graph: Digraph
    colors: tuple[int, ...]
    k: int

    def coloring(self, naive_dsu: bool = False, track_members: bool = True) -> Coloring:
        """Fresh solver-local coloring over this instance's colors."""
        return Coloring(self.colors, self.k,
                        naive_dsu=naive_dsu, track_members=track_members)


def make_instance(node_count: int,
                  arcs: Sequence[tuple[int, int, int]],
                  colors: Sequence[int],
                  k: int | None = None) -> Instance:
    """Build an Instance from plain data; ``colors`` is given per node 1..n."""
    if len(colors) != node_count:
        raise ValueError("need exactly one color per node")
    if k is None:
        k = max(colors, default=0)
    graph = build_graph(node_count, arcs)
    return Instance(graph=graph, colors=(0, *colors), k=k)
