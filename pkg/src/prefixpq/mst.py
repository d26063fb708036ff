"""Minimum spanning tree by Prim's method on the trie queue.

Arcs are queued keyed by their raw weight.  Extraction accepts an arc only
when its head is still outside the tree (lazy deletion of the rest), then
queues every out-arc of the freshly attached vertex.  On an undirected
graph, stored as symmetric arc pairs, the accepted arcs form a minimum
spanning tree of the root's component; equal-weight choices follow queue
FIFO order, so the result is deterministic for a given adjacency order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError
from .ptrie import PTrie, PTrieConfig


@dataclass(frozen=True)
class MstResult:
    """Accepted arcs in acceptance order, their weight sum, and the span."""

    root: str
    edges: tuple[tuple[str, str, int], ...]
    total_weight: int
    spanned: frozenset[str]
    spans_all: bool


def mst_prim(g: Graph, root: str, config: PTrieConfig | None = None) -> MstResult:
    """Grow a spanning tree from ``root``; spans the root's component."""
    if root not in g:
        raise GraphError(f"unknown vertex {root!r}")
    queue = PTrie(config)
    in_tree = {root}
    edges: list[tuple[str, str, int]] = []
    total = 0
    for arc in g.arcs_from(root):
        queue.insert(arc.weight, arc)
    while queue.count:
        _, arc = queue.delete_min()
        if arc.head in in_tree:
            continue
        in_tree.add(arc.head)
        edges.append((arc.tail, arc.head, arc.weight))
        total += arc.weight
        for out in g.arcs_from(arc.head):
            queue.insert(out.weight, out)
    return MstResult(
        root=root,
        edges=tuple(edges),
        total_weight=total,
        spanned=frozenset(in_tree),
        spans_all=len(in_tree) == g.vertex_count,
    )
