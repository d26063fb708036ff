"""Single-source and single-destination shortest paths on the trie queue.

The solver is Dijkstra with lazy deletion: every relaxation inserts a fresh
queue entry keyed by the candidate path weight, and stale entries are
rejected at extraction time when their head is already settled.  The queue's
FIFO behavior at equal keys makes the whole run deterministic given the
graph's adjacency order: among equal path weights, the entry inserted first
is served first, so tie-breaking needs no extra bookkeeping.

The run starts by seeding the source's out-arcs, with the source itself
settled at distance 0.  Settling an entry records its arc as the back edge:
``back[head] = (tail, arc weight)``, so the back chain retraces one
minimum-weight path to the source in reverse.  ``sdsp`` answers "everyone to
one destination" by running the same solver on the reversed graph.

``sssp_trace`` additionally logs one event per extraction, each with the
queue's full pre-extraction content in drain order, which makes the
scheduling of every accept and reject reproducible and inspectable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph, GraphError
from .ptrie import PTrie, PTrieConfig


@dataclass(frozen=True)
class QueueEntry:
    """One queued relaxation: arc plus the path weight it would realize."""

    weight: int
    path_weight: int
    tail: str
    head: str


@dataclass
class PathTree:
    """Shortest-path tree out of (or into) one vertex.

    ``back`` maps each settled vertex to its tree arc as ``(parent, arc
    weight)``; the source maps to None.  Unreached vertices are absent
    from all three maps.
    """

    source: str
    dist: dict[str, int] = field(default_factory=dict)
    hops: dict[str, int] = field(default_factory=dict)
    back: dict[str, tuple[str, int] | None] = field(default_factory=dict)

    def is_reachable(self, v: str) -> bool:
        return v in self.dist

    def distance(self, v: str) -> int | None:
        return self.dist.get(v)

    def hop_count(self, v: str) -> int | None:
        return self.hops.get(v)

    def back_arc(self, v: str) -> tuple[str, int] | None:
        return self.back.get(v)


@dataclass(frozen=True)
class TraceEvent:
    """One extraction: the served entry, its fate, and the queue before it.

    ``queue`` lists every entry in drain order at the moment of service;
    the served entry is its first element.  ``step`` is 1-based.
    """

    step: int
    entry: QueueEntry
    rejected: bool
    queue: tuple[QueueEntry, ...]


def _run(
    g: Graph,
    source: str,
    config: PTrieConfig | None,
    events: list[TraceEvent] | None,
) -> PathTree:
    if source not in g:
        raise GraphError(f"unknown vertex {source!r}")
    queue = PTrie(config)
    tree = PathTree(source=source)
    tree.dist[source] = 0
    tree.hops[source] = 0
    tree.back[source] = None
    for arc in g.arcs_from(source):
        queue.insert(arc.weight, QueueEntry(arc.weight, arc.weight, source, arc.head))
    back = tree.back
    dist = tree.dist
    hops = tree.hops
    step = 0
    while queue.count:
        if events is not None:
            snapshot = tuple(entry for _, entry in queue)
        _, entry = queue.delete_min()
        head = entry.head
        rejected = head in back
        if not rejected:
            back[head] = (entry.tail, entry.weight)
            dist[head] = entry.path_weight
            hops[head] = hops[entry.tail] + 1
            base = entry.path_weight
            for arc in g.arcs_from(head):
                pw = base + arc.weight
                queue.insert(pw, QueueEntry(arc.weight, pw, head, arc.head))
        step += 1
        if events is not None:
            events.append(TraceEvent(step, entry, rejected, snapshot))
    return tree


def sssp(g: Graph, source: str, config: PTrieConfig | None = None) -> PathTree:
    """Shortest paths from ``source`` to every reachable vertex."""
    return _run(g, source, config, None)


def sssp_trace(
    g: Graph, source: str, config: PTrieConfig | None = None
) -> tuple[PathTree, list[TraceEvent]]:
    """Like ``sssp`` but also return the full extraction log."""
    events: list[TraceEvent] = []
    tree = _run(g, source, config, events)
    return tree, events


def sdsp(g: Graph, dest: str, config: PTrieConfig | None = None) -> PathTree:
    """Shortest paths from every vertex into ``dest``.

    Runs the source solver on the reversed graph, so ``dist[v]`` is the
    weight of a lightest v-to-dest path and the back chain from ``v``
    walks that path's vertices toward ``dest`` (arcs reversed).
    """
    return _run(g.reverse(), dest, config, None)


def walk(tree: PathTree, v: str) -> list[tuple[str, int | None]] | None:
    """Back-chain from ``v`` to the tree's source.

    Returns ``[(v, w0), (p1, w1), ..., (source, None)]`` where each weight
    is the arc weight linking that vertex to the next in the list, or None
    when ``v`` was never reached.
    """
    if v not in tree.back:
        return None
    steps: list[tuple[str, int | None]] = []
    cur = v
    while True:
        ba = tree.back[cur]
        if ba is None:
            steps.append((cur, None))
            return steps
        steps.append((cur, ba[1]))
        cur = ba[0]


def format_walk(steps: list[tuple[str, int | None]]) -> str:
    """Render a walk as ``[E]--(0)->[G]--(1)->[F]`` style text."""
    parts: list[str] = []
    for label, weight in steps:
        parts.append(f"[{label}]")
        if weight is not None:
            parts.append(f"--({weight})->")
    return "".join(parts)


def format_trace_event(ev: TraceEvent, verbose: bool = False) -> str:
    """One log line per extraction, plus the queue snapshot when verbose."""
    fate = "reject" if ev.rejected else "accept"
    line = (
        f"step={ev.step} extract={ev.entry.tail}->{ev.entry.head} "
        f"w={ev.entry.path_weight} {fate}"
    )
    if not verbose:
        return line
    body = [line]
    for qe in ev.queue:
        body.append(f"    queued w={qe.path_weight} {qe.tail}->{qe.head}")
    return "\n".join(body)
